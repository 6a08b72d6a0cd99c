//! The pruning order on designs, joins of prunings, and truncation.

use std::collections::BTreeMap;

use super::design::{Body, Design};

/// `small ≤ big`: `small` is `big` with negative branches removed and/or
/// positive subdesigns replaced by `Fid`.
pub fn is_subdesign(small: &Design, big: &Design) -> bool {
    if small.base != big.base {
        return false;
    }
    match (&small.body, &big.body) {
        (Body::Fid, Body::Daimon | Body::Fid | Body::Positive { .. }) => true,
        (Body::Daimon, Body::Daimon) => true,
        (Body::Positive { focus: f, children: a }, Body::Positive { focus: g, children: b }) => {
            f == g && a.len() == b.len() && a.iter().zip(b).all(|((i, x), (j, y))| i == j && is_subdesign(x, y))
        }
        (Body::Negative { branches: a }, Body::Negative { branches: b }) => {
            a.iter().all(|(r, x)| b.get(r).is_some_and(|y| is_subdesign(x, y)))
        }
        _ => false,
    }
}

/// Least upper bound of two prunings of a common design; `None` when no
/// design has both as prunings.
pub fn join(a: &Design, b: &Design) -> Option<Design> {
    if a.base != b.base {
        return None;
    }
    let body = match (&a.body, &b.body) {
        (Body::Fid, Body::Daimon | Body::Fid | Body::Positive { .. }) => b.body.clone(),
        (Body::Daimon | Body::Positive { .. }, Body::Fid) => a.body.clone(),
        (Body::Daimon, Body::Daimon) => Body::Daimon,
        (Body::Positive { focus: f, children: x }, Body::Positive { focus: g, children: y }) => {
            if f != g || x.len() != y.len() || x.keys().ne(y.keys()) {
                return None;
            }
            let children =
                x.iter().zip(y.values()).map(|((i, c), d)| join(c, d).map(|j| (*i, j))).collect::<Option<_>>()?;
            Body::Positive { focus: f.clone(), children }
        }
        (Body::Negative { branches: x }, Body::Negative { branches: y }) => {
            let mut branches = x.clone();
            for (r, d) in y {
                let merged = match x.get(r) {
                    Some(c) => join(c, d)?,
                    None => d.clone(),
                };
                branches.insert(r.clone(), merged);
            }
            Body::Negative { branches }
        }
        _ => return None,
    };
    Some(Design { base: a.base.clone(), body })
}

/// Replaces by `Fid` every positive rule preceded (on its path from the
/// root, itself included) by more than `levels` positive rules.
pub fn prune_positive_levels(d: &Design, levels: usize) -> Design {
    match &d.body {
        Body::Positive { .. } if levels == 0 => Design::fid(d.base.clone()),
        Body::Positive { focus, children } => Design::positive(
            d.base.clone(),
            focus.clone(),
            children.iter().map(|(i, c)| (*i, prune_positive_levels(c, levels - 1))).collect(),
        ),
        Body::Negative { branches } => Design::negative(
            d.base.clone(),
            branches.iter().map(|(r, c)| (r.clone(), prune_positive_levels(c, levels))).collect::<BTreeMap<_, _>>(),
        ),
        Body::Daimon | Body::Fid => d.clone(),
    }
}
