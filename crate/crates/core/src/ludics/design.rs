use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use super::address::{Address, Pitchfork, Ramification};

/// A design: a base pitchfork and the rule applied to it. Every premise is
/// itself a `Design` carrying its own base.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Design {
    pub base: Pitchfork,
    pub body: Body,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Body {
    /// `†` on a positive pitchfork.
    Daimon,
    /// `Ω`: no rule at all, on a positive pitchfork.
    Fid,
    /// `(⊢ξ, I)`; the ramification is the key set of `children`, child `i`
    /// being a negative design on `ξi ⊢ Γᵢ`.
    Positive { focus: Address, children: BTreeMap<u32, Design> },
    /// `(ξ ⊢ N)` on the negative address of the base; branch `I` is a
    /// positive design on `⊢ Γ_I, ξ⋆I`.
    Negative { branches: BTreeMap<Ramification, Design> },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("at {path}: {message}")]
pub struct DesignError {
    /// Rule choices from the root, e.g. `/+0.1{3}/-0.1.3`.
    pub path: String,
    pub message: String,
}

impl Design {
    pub fn daimon(base: Pitchfork) -> Self {
        Design { base, body: Body::Daimon }
    }

    pub fn fid(base: Pitchfork) -> Self {
        Design { base, body: Body::Fid }
    }

    pub fn positive(base: Pitchfork, focus: Address, children: BTreeMap<u32, Design>) -> Self {
        Design { base, body: Body::Positive { focus, children } }
    }

    pub fn negative(base: Pitchfork, branches: BTreeMap<Ramification, Design>) -> Self {
        Design { base, body: Body::Negative { branches } }
    }

    /// The address the root rule acts on, if any.
    pub fn focus(&self) -> Option<&Address> {
        match &self.body {
            Body::Positive { focus, .. } => Some(focus),
            Body::Negative { .. } => self.base.negative.as_ref(),
            Body::Daimon | Body::Fid => None,
        }
    }

    pub fn ramification(&self) -> Option<Ramification> {
        match &self.body {
            Body::Positive { children, .. } => Some(children.keys().copied().collect()),
            _ => None,
        }
    }

    pub fn is_daimon(&self) -> bool {
        matches!(self.body, Body::Daimon)
    }

    pub fn is_fid(&self) -> bool {
        matches!(self.body, Body::Fid)
    }

    /// Premises in order: children by index, or branches by ramification.
    pub fn premises(&self) -> Vec<&Design> {
        match &self.body {
            Body::Positive { children, .. } => children.values().collect(),
            Body::Negative { branches } => branches.values().collect(),
            Body::Daimon | Body::Fid => Vec::new(),
        }
    }

    pub fn contains_daimon(&self) -> bool {
        self.is_daimon() || self.premises().iter().any(|d| d.contains_daimon())
    }

    pub fn contains_fid(&self) -> bool {
        self.is_fid() || self.premises().iter().any(|d| d.contains_fid())
    }

    /// Number of rule nodes (leaves included) on the longest root-to-leaf path.
    pub fn depth(&self) -> usize {
        1 + self.premises().iter().map(|d| d.depth()).max().unwrap_or(0)
    }

    pub fn node_count(&self) -> usize {
        1 + self.premises().iter().map(|d| d.node_count()).sum::<usize>()
    }

    /// Every address at which some rule acts.
    pub fn foci(&self, out: &mut BTreeSet<Address>) {
        if let Some(f) = self.focus() {
            out.insert(f.clone());
        }
        for d in self.premises() {
            d.foci(out);
        }
    }

    /// Delocation: replaces the address prefix `from` by `to` everywhere.
    pub fn relocate(&self, from: &Address, to: &Address) -> Design {
        let base = self.base.relocate(from, to);
        let body = match &self.body {
            Body::Daimon => Body::Daimon,
            Body::Fid => Body::Fid,
            Body::Positive { focus, children } => Body::Positive {
                focus: focus.relocate(from, to),
                children: children.iter().map(|(i, d)| (*i, d.relocate(from, to))).collect(),
            },
            Body::Negative { branches } => Body::Negative {
                branches: branches.iter().map(|(r, d)| (r.clone(), d.relocate(from, to))).collect(),
            },
        };
        Design { base, body }
    }

    /// Checks every node against the daimon, positive and negative rule
    /// schemas (Fid only on positive pitchforks).
    pub fn validate(&self) -> Result<(), DesignError> {
        self.validate_at(&mut String::new())
    }

    fn validate_at(&self, path: &mut String) -> Result<(), DesignError> {
        let fail = |path: &String, message: String| {
            Err(DesignError { path: if path.is_empty() { "root".into() } else { path.clone() }, message })
        };
        if !self.base.is_well_formed() {
            return fail(path, format!("base `{}` has overlapping addresses", self.base));
        }
        match &self.body {
            Body::Daimon | Body::Fid => {
                if let Some(n) = &self.base.negative {
                    let what = if self.is_daimon() { "†" } else { "Fid" };
                    return fail(path, format!("{what} on negative pitchfork `{}` (negative address {n})", self.base));
                }
                Ok(())
            }
            Body::Positive { focus, children } => {
                if self.base.negative.is_some() {
                    return fail(path, format!("positive rule on negative pitchfork `{}`", self.base));
                }
                if !self.base.positive.contains(focus) {
                    return fail(path, format!("focus {focus} is not in the base `{}`", self.base));
                }
                let mut used: Vec<&Address> = Vec::new();
                for (i, child) in children {
                    let expected = focus.child(*i);
                    if child.base.negative.as_ref() != Some(&expected) {
                        return fail(
                            path,
                            format!("premise {i} must have base `{expected} ⊢ ...`, found `{}`", child.base),
                        );
                    }
                    for a in &child.base.positive {
                        if a == focus || !self.base.positive.contains(a) {
                            return fail(path, format!("premise {i} context address {a} is not in Γ"));
                        }
                        if used.contains(&a) {
                            return fail(path, format!("premise contexts overlap at {a}"));
                        }
                    }
                    used.extend(&child.base.positive);
                    if !matches!(child.body, Body::Negative { .. }) {
                        return fail(path, format!("premise {i} on `{}` must be a negative rule", child.base));
                    }
                    let n = path.len();
                    path.push_str(&format!("/+{focus}.{i}"));
                    child.validate_at(path)?;
                    path.truncate(n);
                }
                Ok(())
            }
            Body::Negative { branches } => {
                let Some(xi) = &self.base.negative else {
                    return fail(path, format!("negative rule on positive pitchfork `{}`", self.base));
                };
                for (ram, branch) in branches {
                    if branch.base.negative.is_some() {
                        return fail(path, format!("branch {ram} must have a positive base"));
                    }
                    for a in xi.star(ram) {
                        if !branch.base.positive.contains(&a) {
                            return fail(path, format!("branch {ram} base `{}` lacks {a}", branch.base));
                        }
                    }
                    for a in &branch.base.positive {
                        let is_new = a.parent().is_some_and(|(p, i)| &p == xi && ram.contains(i));
                        if !is_new && !self.base.positive.contains(a) {
                            return fail(path, format!("branch {ram} context address {a} is not in Γ"));
                        }
                    }
                    let n = path.len();
                    path.push_str(&format!("/-{xi}{ram}"));
                    branch.validate_at(path)?;
                    path.truncate(n);
                }
                Ok(())
            }
        }
    }
}
