//! Reduction by equations: leftmost-outermost rewriting with loop detection.

use std::collections::{BTreeMap, HashMap};

use super::language::Language;
use super::term::{GroundTerm, Side, Substitution};
use crate::background::Formula;

pub const DEFAULT_FUEL: usize = 10_000;

/// One rewrite: where it happened and which equation fired.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub path: Vec<usize>,
    pub equation: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Canonical(GroundTerm),
    /// The terms from the first occurrence of the repeated term up to and
    /// including its repetition.
    Loop(Vec<GroundTerm>),
    FuelExhausted(GroundTerm),
    Stuck(GroundTerm),
}

impl Outcome {
    pub fn tag(&self) -> &'static str {
        match self {
            Outcome::Canonical(_) => "canonical",
            Outcome::Loop(_) => "loop",
            Outcome::FuelExhausted(_) => "fuel-exhausted",
            Outcome::Stuck(_) => "stuck",
        }
    }

    pub fn term(&self) -> &GroundTerm {
        match self {
            Outcome::Canonical(t) | Outcome::FuelExhausted(t) | Outcome::Stuck(t) => t,
            Outcome::Loop(cycle) => cycle.last().expect("cycles are nonempty"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub outcome: Outcome,
    pub trace: Vec<Step>,
}

/// Contracts `t` if it is itself a redex, returning the contractum and the
/// equation name.
pub fn contract_root(t: &GroundTerm, lang: &Language) -> Option<(GroundTerm, String)> {
    use GroundTerm as T;
    let fired = |t: GroundTerm, name: &str| Some((t, name.to_owned()));
    match t {
        T::ImplE(fun, arg) => match fun.as_ref() {
            T::ImplI(v, body) => fired(body.subst_var(v, arg), "→E"),
            _ => None,
        },
        T::DisjE { left, right, scrutinee, left_case, right_case } => match scrutinee.as_ref() {
            T::DisjI { side, body, .. } => {
                let (v, case) = side.pick((left, left_case), (right, right_case));
                fired(case.subst_var(v, body), "∨E")
            }
            _ => None,
        },
        T::ConjE(side, body) => match body.as_ref() {
            T::ConjI(a, b) => fired(side.pick(a, b).as_ref().clone(), "∧E"),
            _ => None,
        },
        T::ForallE(w, body) => match body.as_ref() {
            T::ForallI(x, inner) => fired(inner.subst_ind(x, w), "∀E"),
            _ => None,
        },
        T::ExistsE { ind, var, scrutinee, body } => match scrutinee.as_ref() {
            T::ExistsI { witness, body: proof, .. } => {
                let mut s = Substitution::default();
                s.terms.insert(var.clone(), proof.as_ref().clone());
                s.inds.insert(ind.clone(), witness.clone());
                fired(s.apply(body), "∃E")
            }
            _ => None,
        },
        T::Ds(disj, refutation) => match disj.as_ref() {
            T::DisjI { side: Side::Right, body, .. } => fired(body.as_ref().clone(), "DS₂"),
            T::DisjI { side: Side::Left, ty: Formula::Disj(_, b), body } => fired(
                T::explode(b.as_ref().clone(), T::impl_e(refutation.as_ref().clone(), body.as_ref().clone())),
                "DS₁",
            ),
            _ => None,
        },
        T::Op(name, _) => lang.equations.iter().filter(|e| &e.owner == name).find_map(|e| {
            let mut binds = BTreeMap::new();
            match_pattern(&e.lhs, t, &mut binds).then(|| (instantiate(&e.rhs, &binds), e.name.clone()))
        }),
        _ => None,
    }
}

/// First-order matching; repeated metavariables must match equal subterms.
pub fn match_pattern(p: &GroundTerm, t: &GroundTerm, binds: &mut BTreeMap<String, GroundTerm>) -> bool {
    if let GroundTerm::Meta(m) = p {
        return match binds.get(m) {
            Some(b) => b == t,
            None => {
                binds.insert(m.clone(), t.clone());
                true
            }
        };
    }
    p.same_shape(t) && p.children().into_iter().zip(t.children()).all(|(q, u)| match_pattern(q, u, binds))
}

pub fn instantiate(p: &GroundTerm, binds: &BTreeMap<String, GroundTerm>) -> GroundTerm {
    if let GroundTerm::Meta(m) = p {
        if let Some(b) = binds.get(m) {
            return b.clone();
        }
    }
    let mut out = p.clone();
    for (slot, c) in out.children_mut().into_iter().zip(p.children()) {
        *slot = instantiate(c, binds);
    }
    out
}

fn find_redex(t: &GroundTerm, lang: &Language, path: &mut Vec<usize>) -> Option<(GroundTerm, String)> {
    if let Some(r) = contract_root(t, lang) {
        return Some(r);
    }
    for (i, c) in t.children().into_iter().enumerate() {
        path.push(i);
        if let Some(r) = find_redex(c, lang, path) {
            return Some(r);
        }
        path.pop();
    }
    None
}

/// Rewrites the leftmost-outermost redex once.
pub fn reduce_step(t: &GroundTerm, lang: &Language) -> Option<(GroundTerm, Step)> {
    let mut path = Vec::new();
    let (contractum, equation) = find_redex(t, lang, &mut path)?;
    let mut out = t.clone();
    *out.at_path_mut(&path).expect("redex path is valid") = contractum;
    Some((out, Step { path, equation }))
}

/// What a single `Reducer::step` did.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepEvent {
    Reduced(Step),
    Finished(Outcome),
}

/// Step-by-step normalization; `normalize` is this machine run to the end.
#[derive(Clone, Debug)]
pub struct Reducer {
    history: Vec<GroundTerm>,
    trace: Vec<Step>,
    seen: HashMap<GroundTerm, usize>,
    fuel: usize,
    outcome: Option<Outcome>,
}

impl Reducer {
    pub fn new(t: GroundTerm, fuel: usize) -> Self {
        let seen = HashMap::from([(t.clone(), 0)]);
        Reducer { history: vec![t], trace: Vec::new(), seen, fuel, outcome: None }
    }

    pub fn current(&self) -> &GroundTerm {
        self.history.last().expect("history is nonempty")
    }

    pub fn history(&self) -> &[GroundTerm] {
        &self.history
    }

    pub fn trace(&self) -> &[Step] {
        &self.trace
    }

    pub fn outcome(&self) -> Option<&Outcome> {
        self.outcome.as_ref()
    }

    pub fn step(&mut self, lang: &Language) -> StepEvent {
        if let Some(o) = &self.outcome {
            return StepEvent::Finished(o.clone());
        }
        let current = self.current().clone();
        let finish = |me: &mut Self, o: Outcome| {
            me.outcome = Some(o.clone());
            StepEvent::Finished(o)
        };
        if current.has_primitive_head() {
            return finish(self, Outcome::Canonical(current));
        }
        if self.trace.len() >= self.fuel {
            return finish(self, Outcome::FuelExhausted(current));
        }
        let Some((next, step)) = reduce_step(&current, lang) else {
            return finish(self, Outcome::Stuck(current));
        };
        self.trace.push(step.clone());
        if let Some(&first) = self.seen.get(&next) {
            let mut cycle = self.history[first..].to_vec();
            cycle.push(next.clone());
            self.history.push(next);
            return finish(self, Outcome::Loop(cycle));
        }
        self.seen.insert(next.clone(), self.history.len());
        self.history.push(next);
        StepEvent::Reduced(step)
    }

    /// Undoes the last rewrite. Returns false at the initial term.
    pub fn back(&mut self) -> bool {
        self.outcome = None;
        if self.history.len() == 1 {
            return false;
        }
        let last = self.history.pop().expect("history is nonempty");
        self.trace.pop();
        if self.seen.get(&last) == Some(&self.history.len()) {
            self.seen.remove(&last);
        }
        true
    }

    pub fn run(mut self, lang: &Language) -> Reduction {
        loop {
            if let StepEvent::Finished(outcome) = self.step(lang) {
                return Reduction { outcome, trace: self.trace };
            }
        }
    }
}

pub fn normalize(t: &GroundTerm, lang: &Language, fuel: usize) -> Reduction {
    Reducer::new(t.clone(), fuel).run(lang)
}
