//! Languages of grounds: typed terms, reduction by equations, groundhood.

mod groundhood;
mod language;
mod reduce;
mod term;
pub mod text;
mod typing;

use std::collections::BTreeMap;

use thiserror::Error;

pub use groundhood::{closed_grounds, denotes_ground, sample_grounds, GroundhoodConfig, Verdict};
pub use language::{ConstDecl, Equation, Language, LanguageError, OpSignature};
pub use reduce::{
    contract_root, instantiate, match_pattern, normalize, reduce_step, Outcome, Reducer, Reduction, Step, StepEvent,
    DEFAULT_FUEL,
};
pub use term::{GroundTerm, Side, Substitution, TypedVar};
pub use typing::{infer, typecheck, GroundType, TypeError};

use crate::background::{Formula, IndTerm};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("no closing term given for free variable {0}")]
    MissingAssignment(TypedVar),
    #[error("no closing individual given for free variable `{0}`")]
    MissingIndividual(String),
    #[error("{var} needs a closed term of type {expected}, got one of type {found}")]
    TypeMismatch { var: TypedVar, expected: Formula, found: String },
    #[error("individual `{0}` must be closed")]
    OpenIndividual(String),
}

/// Closing assignment for typed and individual variables.
#[derive(Clone, Debug, Default)]
pub struct Assignment {
    pub terms: BTreeMap<TypedVar, GroundTerm>,
    pub individuals: BTreeMap<String, IndTerm>,
}

/// Simultaneous capture-avoiding substitution of closed terms and
/// individuals for every free variable of `t`.
pub fn close_instance(t: &GroundTerm, assignment: &Assignment, lang: &Language) -> Result<GroundTerm, InstanceError> {
    for x in t.free_ind_vars() {
        match assignment.individuals.get(&x) {
            None => return Err(InstanceError::MissingIndividual(x)),
            Some(IndTerm::Var(_)) => return Err(InstanceError::OpenIndividual(x)),
            Some(IndTerm::Const(_)) => {}
        }
    }
    let subst = Substitution { terms: BTreeMap::new(), inds: assignment.individuals.clone() };
    for v in t.free_vars() {
        let u = assignment.terms.get(&v).ok_or_else(|| InstanceError::MissingAssignment(v.clone()))?;
        let expected = subst.apply(&GroundTerm::Var(v.clone()));
        let GroundTerm::Var(expected) = expected else { unreachable!("variables map to variables") };
        match typecheck(u, lang) {
            Ok(ty) if ty.is_closed() && ty.succedent.alpha_eq(&expected.ty) => {}
            Ok(ty) => {
                return Err(InstanceError::TypeMismatch { var: v, expected: expected.ty, found: ty.to_string() })
            }
            Err(e) => return Err(InstanceError::TypeMismatch { var: v, expected: expected.ty, found: e.to_string() }),
        }
    }
    let full = Substitution { terms: assignment.terms.clone(), inds: assignment.individuals.clone() };
    Ok(full.apply(t))
}
