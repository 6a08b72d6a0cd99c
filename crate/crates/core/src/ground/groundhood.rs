//! Deciding whether a closed term denotes a ground over a base.
//!
//! Clauses (A), (∧), (∨), (∃) and (0) are structural. For `→` and `∀` all
//! closed instances of the body must denote; this is decided exactly when
//! the relevant domain is finite (individual constants of the base, or the
//! closed grounds of an implication-free antecedent), and otherwise only
//! refuted by sampling.

use std::fmt;

use super::language::Language;
use super::reduce::{normalize, Outcome, DEFAULT_FUEL};
use super::term::{GroundTerm, Side, TypedVar};
use super::typing::typecheck;
use crate::background::{Formula, IndTerm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No(String),
    Unknown(String),
}

impl Verdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Yes => f.write_str("yes"),
            Verdict::No(r) => write!(f, "no ({r})"),
            Verdict::Unknown(r) => write!(f, "unknown ({r})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroundhoodConfig {
    /// Reduction fuel per normalization.
    pub fuel: usize,
    /// Instances tried when an antecedent has no finite set of closed grounds.
    pub sample_limit: usize,
}

impl Default for GroundhoodConfig {
    fn default() -> Self {
        GroundhoodConfig { fuel: DEFAULT_FUEL, sample_limit: 0 }
    }
}

pub fn denotes_ground(t: &GroundTerm, lang: &Language, config: GroundhoodConfig) -> Verdict {
    let ty = match typecheck(t, lang) {
        Ok(ty) => ty,
        Err(e) => return Verdict::No(e.to_string()),
    };
    if !ty.is_closed() {
        return Verdict::No(format!("open term of type {ty}"));
    }
    Checker { lang, config }.denotes(t, &ty.succedent)
}

struct Checker<'a> {
    lang: &'a Language,
    config: GroundhoodConfig,
}

/// Conjunction of verdicts: the first `No` wins, then any `Unknown`.
fn all(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
    let mut unknown = None;
    for v in verdicts {
        match v {
            Verdict::Yes => {}
            Verdict::No(_) => return v,
            Verdict::Unknown(_) => unknown = unknown.or(Some(v)),
        }
    }
    unknown.unwrap_or(Verdict::Yes)
}

impl Checker<'_> {
    fn denotes(&self, t: &GroundTerm, ty: &Formula) -> Verdict {
        if *ty == Formula::Absurd {
            return Verdict::No("nothing denotes a ground for 0".into());
        }
        let red = normalize(t, self.lang, self.config.fuel);
        let u = match red.outcome {
            Outcome::Canonical(u) => u,
            Outcome::Stuck(u) => return Verdict::No(format!("reduction is stuck at {u}")),
            Outcome::Loop(c) => return Verdict::No(format!("reduction loops after {} step(s)", c.len() - 1)),
            Outcome::FuelExhausted(_) => return Verdict::Unknown(format!("fuel of {} exhausted", self.config.fuel)),
        };
        self.canonical(&u, ty)
    }

    fn canonical(&self, u: &GroundTerm, ty: &Formula) -> Verdict {
        use GroundTerm as T;
        match (u, ty) {
            (T::Const(c, a), Formula::Atom(..)) => {
                if self.lang.is_grounded_constant(c, a) {
                    Verdict::Yes
                } else {
                    Verdict::No(format!("`{c}` names no registered derivation of {a}"))
                }
            }
            (T::ConjI(a, b), Formula::Conj(fa, fb)) => all([self.denotes(a, fa), self.denotes(b, fb)]),
            (T::DisjI { side, body, .. }, Formula::Disj(fa, fb)) => self.denotes(body, side.pick(fa, fb)),
            (T::ExistsI { witness, body, .. }, Formula::Exists(x, a)) => self.denotes(body, &a.subst(x, witness)),
            (T::ImplI(v, body), Formula::Impl(_, b)) => self.function(v, body, b),
            (T::ForallI(x, body), Formula::Forall(y, a)) => {
                let instances = self.lang.base.individuals.iter().map(|c| {
                    let k = IndTerm::constant(c);
                    self.denotes(&body.subst_ind(x, &k), &a.subst(y, &k))
                });
                all(instances.collect::<Vec<_>>())
            }
            (T::Explode(..), _) => Verdict::No(format!("{u} is an exploded term, not a ground for {ty}")),
            (T::Var(v), _) => Verdict::No(format!("free variable {v}")),
            _ => Verdict::No(format!("{u} does not match the clause for {ty}")),
        }
    }

    fn function(&self, v: &TypedVar, body: &GroundTerm, cod: &Formula) -> Verdict {
        match closed_grounds(&v.ty, self.lang) {
            Some(args) => all(args.iter().map(|g| self.denotes(&body.subst_var(v, g), cod)).collect::<Vec<_>>()),
            None => {
                let samples = sample_grounds(&v.ty, self.lang, self.config.sample_limit);
                match all(samples.iter().map(|g| self.denotes(&body.subst_var(v, g), cod)).collect::<Vec<_>>()) {
                    Verdict::Yes => Verdict::Unknown(format!(
                        "{} sampled instance(s) of {} denote; the domain is not finite",
                        samples.len(),
                        v.ty
                    )),
                    other => other,
                }
            }
        }
    }
}

/// All canonical closed grounds of `ty` when there are finitely many of
/// them and they can be listed without deciding function spaces.
pub fn closed_grounds(ty: &Formula, lang: &Language) -> Option<Vec<GroundTerm>> {
    use GroundTerm as T;
    match ty {
        Formula::Absurd => Some(Vec::new()),
        Formula::Atom(..) => Some(
            lang.constants
                .iter()
                .filter(|(c, _)| lang.is_grounded_constant(c, ty))
                .map(|(c, _)| T::constant(c, ty.clone()))
                .collect(),
        ),
        Formula::Conj(a, b) => {
            let (xs, ys) = (closed_grounds(a, lang)?, closed_grounds(b, lang)?);
            Some(xs.iter().flat_map(|x| ys.iter().map(move |y| T::conj_i(x.clone(), y.clone()))).collect())
        }
        Formula::Disj(a, b) => {
            let mut out: Vec<GroundTerm> =
                closed_grounds(a, lang)?.into_iter().map(|g| T::disj_i(Side::Left, ty.clone(), g)).collect();
            out.extend(closed_grounds(b, lang)?.into_iter().map(|g| T::disj_i(Side::Right, ty.clone(), g)));
            Some(out)
        }
        Formula::Exists(x, a) => {
            let mut out = Vec::new();
            for c in &lang.base.individuals {
                let k = IndTerm::constant(c);
                for g in closed_grounds(&a.subst(x, &k), lang)? {
                    out.push(T::exists_i(k.clone(), ty.clone(), g));
                }
            }
            Some(out)
        }
        Formula::Impl(..) | Formula::Forall(..) => None,
    }
}

/// Up to `limit` canonical closed terms of `ty`, built from constants,
/// constant functions and identities. Used only to refute.
pub fn sample_grounds(ty: &Formula, lang: &Language, limit: usize) -> Vec<GroundTerm> {
    use GroundTerm as T;
    if limit == 0 {
        return Vec::new();
    }
    if let Some(mut gs) = closed_grounds(ty, lang) {
        gs.truncate(limit);
        return gs;
    }
    let mut out = Vec::new();
    match ty {
        Formula::Impl(a, b) => {
            let v = TypedVar::new("ξ", Some(0), a.as_ref().clone());
            if a.alpha_eq(b) {
                out.push(T::impl_i(&v, T::var(&v)));
            }
            for g in sample_grounds(b, lang, limit) {
                out.push(T::impl_i(&v, g));
            }
        }
        Formula::Forall(x, a) => {
            if a.free_vars().contains(x) {
                return out;
            }
            for g in sample_grounds(a, lang, limit) {
                out.push(T::forall_i(x, g));
            }
        }
        _ => {}
    }
    out.truncate(limit);
    out
}
