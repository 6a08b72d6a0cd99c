//! Linear implicational ground terms as designs.
//!
//! A term of atomic type `A` becomes a design on `⊢ α`; a term of type
//! `A → B` becomes a design on `α ⊢ β`. Variables are copycats (Fax) between
//! their own address and the address of the result, and applications are
//! cut-nets normalized on the spot.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::background::Formula;
use crate::behaviour::{
    dual_side, enumerate_universe, orthogonal_set, Behaviour, BehaviourError, CandidateVerdict, UniverseBounds,
};
use crate::ground::{GroundTerm, TypedVar};
use crate::interaction::{normalize_designs, InteractionOutcome, DEFAULT_FUEL};
use crate::ludics::named::fax_over;
use crate::ludics::{Address, Design, Pitchfork};

pub mod text;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TranslationError {
    #[error("the term is not linear: some →I does not bind exactly one occurrence")]
    NonLinear,
    #[error("the term is open")]
    Open,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("no behaviour for atom `{0}`")]
    UnknownAtom(String),
    #[error("no design for constant `{0}`")]
    UnknownConstant(String),
    #[error("constant `{name}` has base `{found}`, expected `{expected}`")]
    ConstantShape { name: String, found: Pitchfork, expected: String },
    #[error("application does not converge: {0}")]
    DivergedApplication(String),
    #[error(transparent)]
    Behaviour(#[from] BehaviourError),
}

/// `A → B` as a behaviour on `α ⊢ β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowBehaviour {
    pub domain: Behaviour,
    pub codomain: Behaviour,
    /// `{𝔇′ | for every 𝔇 ∈ |G^A|_F, [[𝔇, 𝔇′]] ∈ |G^B|_F}` within the bounds.
    pub defining: Vec<Design>,
    /// Its bi-orthogonal.
    pub behaviour: Behaviour,
}

/// Builds `A → B` from behaviours on `⊢ α` and `⊢ β`.
pub fn arrow(domain: &Behaviour, codomain: &Behaviour, bounds: &UniverseBounds) -> Result<ArrowBehaviour, TranslationError> {
    let single = |b: &Behaviour| match (&b.base.negative, b.base.positive.len()) {
        (None, 1) => b.base.positive.iter().next().cloned(),
        _ => None,
    };
    let (Some(alpha), Some(beta)) = (single(domain), single(codomain)) else {
        return Err(TranslationError::Unsupported("arrow between behaviours not on single positive bases".into()));
    };
    if !alpha.disjoint(&beta) {
        return Err(TranslationError::Unsupported(format!("arrow bases {alpha} and {beta} overlap")));
    }
    let base = Pitchfork::negative(alpha, [beta]);
    let inputs = domain.free_incarnation();
    let outputs = codomain.free_incarnation();
    let fuel = domain.fuel.max(codomain.fuel);
    let defining: Vec<Design> = enumerate_universe(&base, bounds)?
        .into_iter()
        .filter(|f| {
            inputs.iter().all(|d| match normalize_designs(&[d, f], fuel).outcome {
                InteractionOutcome::Converged(r) => outputs.contains(&r),
                _ => false,
            })
        })
        .collect();
    let side = [base.clone()];
    let families: Vec<Vec<Design>> = defining.iter().map(|d| vec![d.clone()]).collect();
    let orth = orthogonal_set(&families, &side, bounds, fuel)?;
    debug_assert_eq!(orth.side, dual_side(&side)?);
    let mut behaviour = Behaviour::from_orthogonal(base, orth.members, bounds.clone(), fuel)?;
    behaviour.generators = defining.clone();
    behaviour.unknown += orth.unknown;
    Ok(ArrowBehaviour { domain: domain.clone(), codomain: codomain.clone(), defining, behaviour })
}

/// Where a translated term lives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Site {
    Atom(Address),
    Arrow(Address, Address),
}

impl Site {
    pub fn base(&self) -> Pitchfork {
        match self {
            Site::Atom(a) => Pitchfork::positive([a.clone()]),
            Site::Arrow(a, b) => Pitchfork::negative(a.clone(), [b.clone()]),
        }
    }
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base())
    }
}

/// Behaviours for atoms, designs for constants, and the address allocator.
#[derive(Clone, Debug)]
pub struct TranslationEnv {
    /// Keyed by the printed atom (`A`, `P(#a)`, `0`).
    pub atoms: BTreeMap<String, Behaviour>,
    pub constants: BTreeMap<String, Design>,
    pub bounds: UniverseBounds,
    /// Positive levels of each copycat.
    pub fax_depth: usize,
    pub fuel: usize,
    next_root: u32,
}

impl TranslationEnv {
    pub fn new(bounds: UniverseBounds) -> Self {
        TranslationEnv {
            atoms: BTreeMap::new(),
            constants: BTreeMap::new(),
            fax_depth: bounds.max_depth,
            bounds,
            fuel: DEFAULT_FUEL,
            next_root: 0,
        }
    }

    /// A root address not handed out before.
    pub fn fresh(&mut self) -> Address {
        let a = Address::new(&[self.next_root]);
        self.next_root += 1;
        a
    }

    fn fresh_site(&mut self, ty: &Formula) -> Result<Site, TranslationError> {
        let r = self.fresh();
        match ty {
            Formula::Impl(a, b) if is_atomic(a) && is_atomic(b) => Ok(Site::Arrow(r.child(0), r.child(1))),
            t if is_atomic(t) => Ok(Site::Atom(r)),
            t => Err(TranslationError::Unsupported(format!("type {t}"))),
        }
    }

    /// The behaviour of an atom, moved to `at`.
    pub fn atom_at(&self, ty: &Formula, at: &Address) -> Result<Behaviour, TranslationError> {
        let key = ty.to_string();
        let b = self.atoms.get(&key).ok_or(TranslationError::UnknownAtom(key))?;
        let from = b.base.positive.iter().next().cloned().unwrap_or_default();
        Ok(b.relocate(&from, at))
    }

    /// The behaviour of `ty` on `site`.
    pub fn behaviour_of(&self, ty: &Formula, site: &Site) -> Result<Behaviour, TranslationError> {
        match (ty, site) {
            (Formula::Impl(a, b), Site::Arrow(x, y)) => {
                Ok(arrow(&self.atom_at(a, x)?, &self.atom_at(b, y)?, &self.bounds)?.behaviour)
            }
            (t, Site::Atom(x)) if is_atomic(t) => self.atom_at(t, x),
            (t, s) => Err(TranslationError::Unsupported(format!("type {t} on {s}"))),
        }
    }
}

fn is_atomic(f: &Formula) -> bool {
    matches!(f, Formula::Atom(..) | Formula::Absurd)
}

/// The implicational type of a term, read off its annotations.
pub fn type_of(t: &GroundTerm) -> Result<Formula, TranslationError> {
    match t {
        GroundTerm::Var(v) => Ok(v.ty.clone()),
        GroundTerm::Const(_, ty) => Ok(ty.clone()),
        GroundTerm::ImplI(v, body) => Ok(Formula::implies(v.ty.clone(), type_of(body)?)),
        GroundTerm::ImplE(f, _) => match type_of(f)? {
            Formula::Impl(_, b) => Ok(*b),
            other => Err(TranslationError::Unsupported(format!("application of a term of type {other}"))),
        },
        other => Err(TranslationError::Unsupported(format!("constructor {}", other.head_symbol()))),
    }
}

/// A term and its design.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Translation {
    pub design: Design,
    pub ty: Formula,
    pub site: Site,
}

/// Translates a closed linear term of the implicational fragment.
pub fn translate(t: &GroundTerm, env: &mut TranslationEnv) -> Result<Translation, TranslationError> {
    if !t.is_closed() {
        return Err(TranslationError::Open);
    }
    if !t.is_linear() {
        return Err(TranslationError::NonLinear);
    }
    let ty = type_of(t)?;
    let site = env.fresh_site(&ty)?;
    let design = go(t, None, &site, env)?;
    Ok(Translation { design, ty, site })
}

fn go(
    t: &GroundTerm,
    ctx: Option<(&TypedVar, &Address)>,
    site: &Site,
    env: &mut TranslationEnv,
) -> Result<Design, TranslationError> {
    match (t, site) {
        (GroundTerm::Var(v), Site::Atom(out)) => match ctx {
            Some((w, at)) if w == v => Ok(fax_over(at, out, env.fax_depth, &env.bounds.pool)),
            _ => Err(TranslationError::Open),
        },
        (GroundTerm::ImplI(v, body), Site::Arrow(a, b)) => {
            if ctx.is_some() {
                return Err(TranslationError::Unsupported("abstraction under a binder".into()));
            }
            if !is_atomic(&v.ty) {
                return Err(TranslationError::Unsupported(format!("variable of type {}", v.ty)));
            }
            go(body, Some((v, a)), &Site::Atom(b.clone()), env)
        }
        (GroundTerm::ImplE(f, u), Site::Atom(out)) => {
            let Formula::Impl(dom, _) = type_of(f)? else {
                return Err(TranslationError::Unsupported("application of a non-function".into()));
            };
            if !is_atomic(&dom) {
                return Err(TranslationError::Unsupported(format!("argument of type {dom}")));
            }
            if let Some((v, _)) = ctx {
                if f.count_free(v) > 0 {
                    return Err(TranslationError::Unsupported("variable in function position".into()));
                }
            }
            let arg = env.fresh().child(0);
            let df = go(f, None, &Site::Arrow(arg.clone(), out.clone()), env)?;
            let du = go(u, ctx, &Site::Atom(arg), env)?;
            match normalize_designs(&[&du, &df], env.fuel).outcome {
                InteractionOutcome::Converged(d) => Ok(d),
                InteractionOutcome::Diverged { at, reason } => Err(TranslationError::DivergedApplication(match at {
                    Some(a) => format!("{reason} at {a}"),
                    None => reason.to_string(),
                })),
                InteractionOutcome::FuelExhausted => Err(TranslationError::DivergedApplication("fuel exhausted".into())),
            }
        }
        (GroundTerm::Const(name, _), _) => {
            let d = env.constants.get(name).ok_or_else(|| TranslationError::UnknownConstant(name.clone()))?;
            let shape_error = || TranslationError::ConstantShape {
                name: name.clone(),
                found: d.base.clone(),
                expected: site.to_string(),
            };
            match site {
                Site::Atom(out) => {
                    let [from] = d.base.positive.iter().collect::<Vec<_>>()[..] else { return Err(shape_error()) };
                    if d.base.negative.is_some() {
                        return Err(shape_error());
                    }
                    Ok(d.relocate(from, out))
                }
                Site::Arrow(a, b) => {
                    let (Some(x), [y]) = (&d.base.negative, &d.base.positive.iter().collect::<Vec<_>>()[..]) else {
                        return Err(shape_error());
                    };
                    // through a scratch prefix so that the two moves cannot collide
                    let scratch = Address::new(&[u32::MAX]);
                    let d = d.relocate(x, &scratch.child(0)).relocate(y, &scratch.child(1));
                    Ok(d.relocate(&scratch.child(0), a).relocate(&scratch.child(1), b))
                }
            }
        }
        (other, _) => Err(TranslationError::Unsupported(format!("{} on {site}", other.head_symbol()))),
    }
}

/// Classifies `d` in the behaviour of `t`'s type, on the site `d` lives on.
pub fn check_translation(t: &GroundTerm, d: &Design, env: &TranslationEnv) -> Result<CandidateVerdict, TranslationError> {
    let ty = type_of(t)?;
    let site = match (&ty, &d.base.negative, &d.base.positive.iter().collect::<Vec<_>>()[..]) {
        (Formula::Impl(..), Some(a), [b]) => Site::Arrow(a.clone(), (*b).clone()),
        (_, None, [a]) => Site::Atom((*a).clone()),
        _ => return Ok(CandidateVerdict::NotInBehaviour),
    };
    Ok(env.behaviour_of(&ty, &site)?.classify(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::behaviour::{one, zero};
    use crate::ludics::named::{atomic_bomb, daimon_at};

    fn identity(ty: Formula) -> GroundTerm {
        let x = TypedVar { name: "x".into(), index: None, ty };
        GroundTerm::ImplI(x.clone(), Box::new(GroundTerm::Var(x)))
    }

    fn env() -> TranslationEnv {
        let bounds = UniverseBounds::powerset(2, 1);
        let mut env = TranslationEnv::new(bounds.clone());
        env.atoms.insert("0".into(), zero(&Address::root(), bounds.clone()).unwrap());
        env.atoms.insert("1".into(), one(&Address::root(), bounds).unwrap());
        env
    }

    #[test]
    fn identity_is_fax() {
        let mut env = env();
        let tr = translate(&identity(Formula::Absurd), &mut env).unwrap();
        let (a, b) = (Address::new(&[0, 0]), Address::new(&[0, 1]));
        assert_eq!(tr.site, Site::Arrow(a.clone(), b.clone()));
        assert_eq!(tr.design, fax_over(&a, &b, 2, &env.bounds.pool));
    }

    #[test]
    fn application_of_identity_to_a_constant() {
        let mut env = env();
        env.constants.insert("w".into(), daimon_at(&Address::root()));
        let t = GroundTerm::ImplE(
            Box::new(identity(Formula::Absurd)),
            Box::new(GroundTerm::Const("w".into(), Formula::Absurd)),
        );
        let tr = translate(&t, &mut env).unwrap();
        assert_eq!(tr.design, daimon_at(&Address::new(&[0])));
        let verdict = check_translation(&t, &tr.design, &env).unwrap();
        assert_eq!(verdict.to_string(), "PseudoGround(contains-daimon)");
    }

    #[test]
    fn identity_on_one_sends_bomb_to_bomb() {
        let mut env = env();
        env.constants.insert("b".into(), atomic_bomb(&Address::root()));
        let one = Formula::prop("1");
        let t = GroundTerm::ImplE(Box::new(identity(one.clone())), Box::new(GroundTerm::Const("b".into(), one)));
        let tr = translate(&t, &mut env).unwrap();
        assert_eq!(tr.design, atomic_bomb(&Address::new(&[0])));
        assert_eq!(check_translation(&t, &tr.design, &env).unwrap(), CandidateVerdict::Ground);
    }

    #[test]
    fn nonlinear_terms_are_rejected() {
        let x = TypedVar { name: "x".into(), index: None, ty: Formula::Absurd };
        let y = TypedVar { name: "y".into(), index: None, ty: Formula::Absurd };
        let k = GroundTerm::ImplI(x.clone(), Box::new(GroundTerm::ImplI(y, Box::new(GroundTerm::Var(x)))));
        assert_eq!(translate(&k, &mut env()), Err(TranslationError::NonLinear));
    }
}
