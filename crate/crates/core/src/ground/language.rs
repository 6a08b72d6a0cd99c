use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use super::term::GroundTerm;
use crate::background::{AtomicBase, AtomicDerivation, DerivationError, Formula};

/// A registered atomic constant `c^A`, optionally backed by a derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstDecl {
    pub ty: Formula,
    pub derivation: Option<AtomicDerivation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpSignature {
    pub params: Vec<Formula>,
    pub result: Formula,
}

/// `lhs = rhs` defining the user operation `owner`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub name: String,
    pub owner: String,
    pub lhs: GroundTerm,
    pub rhs: GroundTerm,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LanguageError {
    #[error("constant `{0}` must have a closed atomic type, found `{1}`")]
    NonAtomicConstant(String, Formula),
    #[error("constant `{name}`: {source}")]
    BadDerivation { name: String, source: DerivationError },
    #[error("constant `{name}` is declared at `{declared}` but its derivation proves `{proved}`")]
    DerivationMismatch { name: String, declared: Formula, proved: Formula },
    #[error("`{0}` is declared twice")]
    Duplicate(String),
    #[error("equation `{0}`: left-hand side must be an application of a declared operation")]
    BadLeftSide(String),
    #[error("equation `{name}`: metavariable `{meta}` occurs on the right but not on the left")]
    UnboundMeta { name: String, meta: String },
}

/// An extension of `C` over an atomic base: constants naming atomic
/// derivations, extra operation symbols and their defining equations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Language {
    pub base: AtomicBase,
    pub constants: BTreeMap<String, ConstDecl>,
    pub ops: BTreeMap<String, OpSignature>,
    pub equations: Vec<Equation>,
}

impl Language {
    pub fn new(base: AtomicBase) -> Self {
        Language { base, ..Default::default() }
    }

    pub fn add_constant(
        &mut self,
        name: &str,
        ty: Formula,
        derivation: Option<AtomicDerivation>,
    ) -> Result<(), LanguageError> {
        if !ty.is_atomic() || !ty.is_closed() {
            return Err(LanguageError::NonAtomicConstant(name.to_owned(), ty));
        }
        if self.constants.contains_key(name) {
            return Err(LanguageError::Duplicate(name.to_owned()));
        }
        if let Some(d) = &derivation {
            d.check(&self.base)
                .map_err(|source| LanguageError::BadDerivation { name: name.to_owned(), source })?;
            if d.conclusion != ty {
                return Err(LanguageError::DerivationMismatch {
                    name: name.to_owned(),
                    declared: ty,
                    proved: d.conclusion.clone(),
                });
            }
        }
        self.constants.insert(name.to_owned(), ConstDecl { ty, derivation });
        Ok(())
    }

    pub fn add_op(&mut self, name: &str, params: Vec<Formula>, result: Formula) -> Result<(), LanguageError> {
        if self.ops.contains_key(name) {
            return Err(LanguageError::Duplicate(name.to_owned()));
        }
        self.ops.insert(name.to_owned(), OpSignature { params, result });
        Ok(())
    }

    pub fn add_equation(&mut self, name: &str, lhs: GroundTerm, rhs: GroundTerm) -> Result<(), LanguageError> {
        let owner = match &lhs {
            GroundTerm::Op(owner, args)
                if self.ops.get(owner).is_some_and(|sig| sig.params.len() == args.len()) =>
            {
                owner.clone()
            }
            _ => return Err(LanguageError::BadLeftSide(name.to_owned())),
        };
        let (mut left, mut right) = (BTreeSet::new(), BTreeSet::new());
        lhs.metas(&mut left);
        rhs.metas(&mut right);
        if let Some(meta) = right.difference(&left).next() {
            return Err(LanguageError::UnboundMeta { name: name.to_owned(), meta: meta.clone() });
        }
        self.equations.push(Equation { name: name.to_owned(), owner, lhs, rhs });
        Ok(())
    }

    /// Whether `c` names a valid closed derivation of `ty`.
    pub fn is_grounded_constant(&self, c: &str, ty: &Formula) -> bool {
        self.constants
            .get(c)
            .is_some_and(|d| d.ty == *ty && d.derivation.is_some())
    }
}
