use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use super::language::Language;
use super::term::{GroundTerm, TypedVar};
use crate::background::Formula;

/// A hypothetical type `A1, ..., An ⊢ B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundType {
    /// Free typed variables of the term, sorted.
    pub assumptions: Vec<TypedVar>,
    pub succedent: Formula,
    pub individual_vars: BTreeSet<String>,
}

impl GroundType {
    pub fn antecedents(&self) -> Vec<Formula> {
        self.assumptions.iter().map(|v| v.ty.clone()).collect()
    }

    pub fn is_closed(&self) -> bool {
        self.assumptions.is_empty() && self.individual_vars.is_empty()
    }
}

impl fmt::Display for GroundType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ants: Vec<String> = self.antecedents().iter().map(|a| a.to_string()).collect();
        if !ants.is_empty() {
            write!(f, "{} ", ants.join(", "))?;
        }
        write!(f, "⊢ {}", self.succedent)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("type error at {path:?} in `{subterm}`: {message}")]
pub struct TypeError {
    pub path: Vec<usize>,
    pub subterm: String,
    pub message: String,
}

pub fn typecheck(t: &GroundTerm, lang: &Language) -> Result<GroundType, TypeError> {
    let succedent = infer(t, lang)?;
    Ok(GroundType {
        assumptions: t.free_vars().into_iter().collect(),
        succedent,
        individual_vars: t.free_ind_vars(),
    })
}

/// The succedent type of `t`.
pub fn infer(t: &GroundTerm, lang: &Language) -> Result<Formula, TypeError> {
    Checker { lang, path: Vec::new() }.infer(t)
}

struct Checker<'a> {
    lang: &'a Language,
    path: Vec<usize>,
}

fn mismatch(what: &str, expected: &Formula, found: &Formula) -> String {
    format!("{what}: expected `{expected}`, found `{found}`")
}

impl Checker<'_> {
    fn fail(&self, t: &GroundTerm, message: String) -> TypeError {
        TypeError { path: self.path.clone(), subterm: t.to_string(), message }
    }

    fn child(&mut self, i: usize, t: &GroundTerm) -> Result<Formula, TypeError> {
        self.path.push(i);
        let r = self.infer(t);
        self.path.pop();
        r
    }

    fn expect(&self, t: &GroundTerm, what: &str, expected: &Formula, found: &Formula) -> Result<(), TypeError> {
        if expected.alpha_eq(found) {
            Ok(())
        } else {
            Err(self.fail(t, mismatch(what, expected, found)))
        }
    }

    fn eigen(&self, t: &GroundTerm, x: &str, body: &GroundTerm, except: Option<&TypedVar>) -> Result<(), TypeError> {
        for v in body.free_vars() {
            if Some(&v) != except && v.ty.free_vars().contains(x) {
                return Err(self.fail(t, format!("`{x}` occurs free in the open assumption `{v}`")));
            }
        }
        Ok(())
    }

    fn infer(&mut self, t: &GroundTerm) -> Result<Formula, TypeError> {
        use GroundTerm as T;
        match t {
            T::Var(v) => Ok(v.ty.clone()),
            T::Const(c, ty) => {
                if !ty.is_atomic() {
                    return Err(self.fail(t, format!("constant `{c}` must have atomic type")));
                }
                if let Some(decl) = self.lang.constants.get(c) {
                    self.expect(t, &format!("constant `{c}`"), &decl.ty, ty)?;
                }
                Ok(ty.clone())
            }
            T::ConjI(a, b) => Ok(Formula::conj(self.child(0, a)?, self.child(1, b)?)),
            T::DisjI { side, ty, body } => {
                let Formula::Disj(l, r) = ty else {
                    return Err(self.fail(t, format!("∨I annotation `{ty}` is not a disjunction")));
                };
                let found = self.child(0, body)?;
                self.expect(t, "∨I premise", side.pick(l, r), &found)?;
                Ok(ty.clone())
            }
            T::ImplI(v, body) => Ok(Formula::implies(v.ty.clone(), self.child(0, body)?)),
            T::ForallI(x, body) => {
                let b = self.child(0, body)?;
                self.eigen(t, x, body, None)?;
                Ok(Formula::forall(x, b))
            }
            T::ExistsI { witness, ty, body } => {
                let Formula::Exists(x, a) = ty else {
                    return Err(self.fail(t, format!("∃I annotation `{ty}` is not existential")));
                };
                let found = self.child(0, body)?;
                self.expect(t, "∃I premise", &a.subst(x, witness), &found)?;
                Ok(ty.clone())
            }
            T::Explode(target, body) => {
                let found = self.child(0, body)?;
                self.expect(t, "0-elimination premise", &Formula::Absurd, &found)?;
                Ok(target.clone())
            }
            T::ConjE(side, body) => match self.child(0, body)? {
                Formula::Conj(a, b) => Ok(*side.pick(a, b)),
                other => Err(self.fail(t, format!("∧E applied to `{other}`"))),
            },
            T::DisjE { left, right, scrutinee, left_case, right_case } => {
                let (a1, a2) = match self.child(0, scrutinee)? {
                    Formula::Disj(a, b) => (*a, *b),
                    other => return Err(self.fail(t, format!("∨E applied to `{other}`"))),
                };
                self.expect(t, "left bound variable", &a1, &left.ty)?;
                self.expect(t, "right bound variable", &a2, &right.ty)?;
                let c = self.child(1, left_case)?;
                let d = self.child(2, right_case)?;
                self.expect(t, "∨E right case", &c, &d)?;
                Ok(c)
            }
            T::ImplE(fun, arg) => {
                let f = self.child(0, fun)?;
                let a = self.child(1, arg)?;
                match f {
                    Formula::Impl(dom, cod) => {
                        self.expect(t, "→E argument", &dom, &a)?;
                        Ok(*cod)
                    }
                    other => Err(self.fail(t, format!("→E applied to `{other}`"))),
                }
            }
            T::ForallE(w, body) => match self.child(0, body)? {
                Formula::Forall(x, a) => Ok(a.subst(&x, w)),
                other => Err(self.fail(t, format!("∀E applied to `{other}`"))),
            },
            T::ExistsE { ind, var, scrutinee, body } => {
                let s = self.child(0, scrutinee)?;
                let Formula::Exists(y, a) = &s else {
                    return Err(self.fail(t, format!("∃E applied to `{s}`")));
                };
                self.expect(t, "∃E bound variable", &a.subst(y, &crate::background::IndTerm::Var(ind.clone())), &var.ty)?;
                let c = self.child(1, body)?;
                if c.free_vars().contains(ind) || s.free_vars().contains(ind) {
                    return Err(self.fail(t, format!("eigenvariable `{ind}` escapes its scope")));
                }
                self.eigen(t, ind, body, Some(var))?;
                Ok(c)
            }
            T::Ds(disj, refutation) => {
                let (a, b) = match self.child(0, disj)? {
                    Formula::Disj(a, b) => (*a, *b),
                    other => return Err(self.fail(t, format!("DS applied to `{other}`"))),
                };
                let r = self.child(1, refutation)?;
                self.expect(t, "DS refutation", &Formula::not(a), &r)?;
                Ok(b)
            }
            T::Op(name, args) => {
                let Some(sig) = self.lang.ops.get(name) else {
                    return Err(self.fail(t, format!("unknown operation `{name}`")));
                };
                if sig.params.len() != args.len() {
                    return Err(self.fail(
                        t,
                        format!("`{name}` takes {} argument(s), found {}", sig.params.len(), args.len()),
                    ));
                }
                for (i, (p, arg)) in sig.params.iter().zip(args).enumerate() {
                    let found = self.child(i, arg)?;
                    self.expect(t, &format!("argument {} of `{name}`", i + 1), p, &found)?;
                }
                Ok(sig.result.clone())
            }
            T::Meta(m) => Err(self.fail(t, format!("metavariable `{m}` outside an equation"))),
        }
    }
}
