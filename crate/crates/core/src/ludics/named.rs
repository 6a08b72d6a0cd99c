//! The named designs: Daimon, Fid, atomic bomb, skunk, sponges and Fax.

use std::collections::BTreeMap;

use super::address::{Address, Pitchfork, Ramification};
use super::design::Design;

/// `†` on `⊢ ξ`.
pub fn daimon_at(xi: &Address) -> Design {
    Design::daimon(Pitchfork::positive([xi.clone()]))
}

/// `Ω` on `⊢ ξ`.
pub fn fid_at(xi: &Address) -> Design {
    Design::fid(Pitchfork::positive([xi.clone()]))
}

/// The positive rule `(⊢ξ, ∅)` with no premises.
pub fn atomic_bomb(xi: &Address) -> Design {
    Design::positive(Pitchfork::positive([xi.clone()]), xi.clone(), BTreeMap::new())
}

/// The negative rule on `ξ ⊢` with `N = ∅`.
pub fn skunk(xi: &Address) -> Design {
    Design::negative(Pitchfork::negative(xi.clone(), []), BTreeMap::new())
}

/// Negative rule on `ξ ⊢` with every branch closed by `†`.
pub fn negative_sponge(xi: &Address, rams: impl IntoIterator<Item = Ramification>) -> Design {
    let branches = rams
        .into_iter()
        .map(|r| {
            let d = Design::daimon(Pitchfork::positive(xi.star(&r)));
            (r, d)
        })
        .collect();
    Design::negative(Pitchfork::negative(xi.clone(), []), branches)
}

/// Depth-bounded unfolding of the copycat design on `ξ ⊢ ξ'`.
///
/// The root is a negative rule on `ξ` with one branch per `I ⊆ {0..=arity}`;
/// branch `I` plays `(⊢ξ', I)` and continues with `fax(ξ'i, ξi, depth - 1)`.
/// At depth 0 every branch is `Fid`.
pub fn fax(xi: &Address, xi2: &Address, depth: usize, arity: u32) -> Design {
    fax_over(xi, xi2, depth, &Ramification::all_subsets_up_to(arity))
}

/// [`fax`] with one branch per ramification of `pool`.
pub fn fax_over(xi: &Address, xi2: &Address, depth: usize, pool: &[Ramification]) -> Design {
    let base = Pitchfork::negative(xi.clone(), [xi2.clone()]);
    let branches = pool
        .iter()
        .cloned()
        .map(|ram| {
            let mut addrs = xi.star(&ram);
            addrs.insert(xi2.clone());
            let branch_base = Pitchfork::positive(addrs);
            let d = if depth == 0 {
                Design::fid(branch_base)
            } else {
                let children = ram
                    .iter()
                    .map(|i| (i, fax_over(&xi2.child(i), &xi.child(i), depth - 1, pool)))
                    .collect();
                Design::positive(branch_base, xi2.clone(), children)
            };
            (ram, d)
        })
        .collect();
    Design::negative(base, branches)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xi() -> Address {
        Address::new(&[0])
    }

    #[test]
    fn named_designs_are_valid() {
        let x2 = Address::new(&[1]);
        for d in [
            daimon_at(&xi()),
            fid_at(&xi()),
            atomic_bomb(&xi()),
            skunk(&xi()),
            negative_sponge(&xi(), Ramification::all_subsets_up_to(1)),
            fax(&xi(), &x2, 0, 1),
            fax(&xi(), &x2, 1, 1),
            fax(&xi(), &x2, 3, 2),
        ] {
            d.validate().unwrap_or_else(|e| panic!("{e}"));
        }
    }

    #[test]
    fn fax_branches_over_powerset() {
        let f = fax(&xi(), &Address::new(&[1]), 1, 1);
        assert_eq!(f.premises().len(), 4);
        let empty = &f.premises()[0];
        assert_eq!(empty.focus(), Some(&Address::new(&[1])));
        assert_eq!(empty.ramification(), Some(Ramification::empty()));
    }
}
