//! Behaviours over bounded design universes.
//!
//! The space of counter-designs is infinite, so every orthogonal here is
//! taken inside the finite universe fixed by [`UniverseBounds`]. A design on
//! a base with several addresses is tested against a family of designs, one
//! per address, so orthogonal sets are sets of families.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::interaction::{normalize_designs, prune_to_pairs, trace_pairs, Orthogonality, DEFAULT_FUEL};
use crate::ludics::named::{atomic_bomb, daimon_at, skunk};
use crate::ludics::{join, Address, Design, DesignError, Pitchfork, Ramification};

pub mod text;

pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniverseBounds {
    /// Longest root-to-leaf path, counted in nodes.
    pub max_depth: usize,
    pub pool: Vec<Ramification>,
    /// Largest universe enumerated before giving up.
    pub cap: usize,
}

impl UniverseBounds {
    pub fn new(max_depth: usize, pool: impl IntoIterator<Item = Ramification>) -> Self {
        let pool: BTreeSet<Ramification> = pool.into_iter().collect();
        UniverseBounds { max_depth, pool: pool.into_iter().collect(), cap: DEFAULT_CAP }
    }

    /// Depth `max_depth`, pool of all subsets of `{0, ..., n}`.
    pub fn powerset(max_depth: usize, n: u32) -> Self {
        Self::new(max_depth, Ramification::all_subsets_up_to(n))
    }

    fn check(&self) -> Result<(), BehaviourError> {
        if self.max_depth == 0 {
            return Err(BehaviourError::InvalidBounds("depth must be at least 1".into()));
        }
        Ok(())
    }
}

impl fmt::Display for UniverseBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pool: Vec<String> = self.pool.iter().map(|r| r.to_string()).collect();
        write!(f, "depth ≤ {}, pool {{{}}}", self.max_depth, pool.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BehaviourError {
    #[error("invalid bounds: {0}")]
    InvalidBounds(String),
    #[error("universe larger than the cap of {0} designs")]
    TooLarge(usize),
    #[error("a behaviour needs at least one generator")]
    NoGenerators,
    #[error("generators on different bases `{0}` and `{1}`")]
    MixedBases(Pitchfork, Pitchfork),
    #[error("invalid generator: {0}")]
    InvalidDesign(DesignError),
    #[error("no dual for bases {0}")]
    NoDual(String),
    #[error("the design is not a member of the behaviour")]
    NotAMember,
    #[error("membership unknown: fuel exhausted")]
    Unknown,
}

/// One design per pitchfork of a side.
pub type Family = Vec<Design>;

fn product<T: Clone>(lists: &[Vec<T>], cap: usize) -> Result<Vec<Vec<T>>, BehaviourError> {
    let size = lists.iter().try_fold(1usize, |acc, l| acc.checked_mul(l.len()).filter(|n| *n <= cap));
    if size.is_none() {
        return Err(BehaviourError::TooLarge(cap));
    }
    let mut out: Vec<Vec<T>> = vec![Vec::new()];
    for list in lists {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                list.iter().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect();
    }
    Ok(out)
}

/// Ways to hand each address of `rest` to one premise of `ram` or drop it.
fn distributions(rest: &[Address], ram: &Ramification) -> Vec<Vec<BTreeSet<Address>>> {
    let slots = ram.len() + 1;
    let total = slots.pow(rest.len() as u32);
    (0..total)
        .map(|mut code| {
            let mut parts = vec![BTreeSet::new(); ram.len()];
            for a in rest {
                let k = code % slots;
                code /= slots;
                if k < ram.len() {
                    parts[k].insert(a.clone());
                }
            }
            parts
        })
        .collect()
}

fn positives(ctx: &BTreeSet<Address>, depth: usize, bounds: &UniverseBounds) -> Result<Vec<Design>, BehaviourError> {
    if depth == 0 {
        return Ok(Vec::new());
    }
    let base = Pitchfork::positive(ctx.iter().cloned());
    let mut out = vec![Design::daimon(base.clone()), Design::fid(base.clone())];
    for focus in ctx {
        let rest: Vec<Address> = ctx.iter().filter(|a| *a != focus).cloned().collect();
        for ram in &bounds.pool {
            for parts in distributions(&rest, ram) {
                let lists = ram
                    .iter()
                    .zip(&parts)
                    .map(|(i, c)| negatives(&focus.child(i), c, depth - 1, bounds))
                    .collect::<Result<Vec<_>, _>>()?;
                for kids in product(&lists, bounds.cap)? {
                    out.push(Design::positive(base.clone(), focus.clone(), ram.iter().zip(kids).collect()));
                }
                if out.len() > bounds.cap {
                    return Err(BehaviourError::TooLarge(bounds.cap));
                }
            }
        }
    }
    Ok(out)
}

fn negatives(
    xi: &Address,
    ctx: &BTreeSet<Address>,
    depth: usize,
    bounds: &UniverseBounds,
) -> Result<Vec<Design>, BehaviourError> {
    if depth == 0 {
        return Ok(Vec::new());
    }
    let base = Pitchfork::negative(xi.clone(), ctx.iter().cloned());
    let options = bounds
        .pool
        .iter()
        .map(|ram| {
            let mut addrs = ctx.clone();
            addrs.extend(xi.star(ram));
            positives(&addrs, depth - 1, bounds)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut out = Vec::new();
    for mask in 0u64..1 << bounds.pool.len() {
        let chosen: Vec<usize> = (0..bounds.pool.len()).filter(|k| mask >> k & 1 == 1).collect();
        let lists: Vec<Vec<Design>> = chosen.iter().map(|&k| options[k].clone()).collect();
        for bodies in product(&lists, bounds.cap)? {
            let branches = chosen.iter().map(|&k| bounds.pool[k].clone()).zip(bodies).collect();
            out.push(Design::negative(base.clone(), branches));
        }
        if out.len() > bounds.cap {
            return Err(BehaviourError::TooLarge(bounds.cap));
        }
    }
    Ok(out)
}

/// Every design on `base` within `bounds`, `†` and `Ω` leaves included.
/// `Ω` is only used at positive positions.
pub fn enumerate_universe(base: &Pitchfork, bounds: &UniverseBounds) -> Result<Vec<Design>, BehaviourError> {
    bounds.check()?;
    match &base.negative {
        Some(xi) => negatives(xi, &base.positive, bounds.max_depth, bounds),
        None => positives(&base.positive, bounds.max_depth, bounds),
    }
}

/// Every family on `side` within `bounds`.
pub fn enumerate_families(side: &[Pitchfork], bounds: &UniverseBounds) -> Result<Vec<Family>, BehaviourError> {
    let lists = side.iter().map(|p| enumerate_universe(p, bounds)).collect::<Result<Vec<_>, _>>()?;
    product(&lists, bounds.cap)
}

/// The bases a counter-family must have to close a net with `side`.
pub fn dual_side(side: &[Pitchfork]) -> Result<Vec<Pitchfork>, BehaviourError> {
    let shown = || side.iter().map(|p| format!("`{p}`")).collect::<Vec<_>>().join(", ");
    match side {
        [p] => Ok(p
            .negative
            .iter()
            .map(|n| Pitchfork::positive([n.clone()]))
            .chain(p.positive.iter().map(|a| Pitchfork::negative(a.clone(), [])))
            .collect()),
        _ => {
            let mut dual = Pitchfork::default();
            for p in side {
                match (&p.negative, p.positive.len()) {
                    (Some(n), 0) => {
                        dual.positive.insert(n.clone());
                    }
                    (None, 1) if dual.negative.is_none() => {
                        dual.negative = p.positive.iter().next().cloned();
                    }
                    _ => return Err(BehaviourError::NoDual(shown())),
                }
            }
            Ok(vec![dual])
        }
    }
}

fn converge(a: &[Design], b: &[Design], fuel: usize) -> Orthogonality {
    let refs: Vec<&Design> = a.iter().chain(b).collect();
    Orthogonality::of(&normalize_designs(&refs, fuel))
}

/// An orthogonal set, with the number of candidates dropped because an
/// interaction ran out of fuel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalSet {
    pub side: Vec<Pitchfork>,
    pub members: Vec<Family>,
    pub unknown: usize,
}

/// `E^⊥` inside the bounded universe of the dual of `side`.
pub fn orthogonal_set(
    e: &[Family],
    side: &[Pitchfork],
    bounds: &UniverseBounds,
    fuel: usize,
) -> Result<OrthogonalSet, BehaviourError> {
    let dual = dual_side(side)?;
    let mut members = Vec::new();
    let mut unknown = 0;
    'candidates: for cand in enumerate_families(&dual, bounds)? {
        for f in e {
            match converge(&cand, f, fuel) {
                Orthogonality::Yes => {}
                Orthogonality::No => continue 'candidates,
                Orthogonality::Unknown => {
                    unknown += 1;
                    continue 'candidates;
                }
            }
        }
        members.push(cand);
    }
    Ok(OrthogonalSet { side: dual, members, unknown })
}

/// `E^⊥⊥`, back in the universe of `side`.
pub fn biorthogonal(
    e: &[Family],
    side: &[Pitchfork],
    bounds: &UniverseBounds,
    fuel: usize,
) -> Result<OrthogonalSet, BehaviourError> {
    let first = orthogonal_set(e, side, bounds, fuel)?;
    let mut second = orthogonal_set(&first.members, &first.side, bounds, fuel)?;
    second.unknown += first.unknown;
    Ok(second)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PseudoReason {
    ContainsDaimon,
    NotMaterial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CandidateVerdict {
    Ground,
    PseudoGround(PseudoReason),
    NotInBehaviour,
    Unknown(usize),
}

impl fmt::Display for CandidateVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CandidateVerdict::Ground => f.write_str("Ground"),
            CandidateVerdict::PseudoGround(PseudoReason::ContainsDaimon) => f.write_str("PseudoGround(contains-daimon)"),
            CandidateVerdict::PseudoGround(PseudoReason::NotMaterial) => f.write_str("PseudoGround(not-material)"),
            CandidateVerdict::NotInBehaviour => f.write_str("NotInBehaviour"),
            CandidateVerdict::Unknown(fuel) => write!(f, "Unknown(fuel {fuel})"),
        }
    }
}

/// A behaviour on one base, represented by its orthogonal inside the bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Behaviour {
    pub base: Pitchfork,
    pub generators: Vec<Design>,
    pub bounds: UniverseBounds,
    /// The counter-families, one design per address of the base.
    pub orthogonal: Vec<Family>,
    /// The bounded universe of the base, filtered by the orthogonal.
    pub members: Vec<Design>,
    pub unknown: usize,
    pub fuel: usize,
}

impl Behaviour {
    /// `E^⊥⊥` for the generators `E`.
    pub fn generate(generators: Vec<Design>, bounds: UniverseBounds, fuel: usize) -> Result<Self, BehaviourError> {
        let base = generators.first().ok_or(BehaviourError::NoGenerators)?.base.clone();
        for g in &generators {
            g.validate().map_err(BehaviourError::InvalidDesign)?;
            if g.base != base {
                return Err(BehaviourError::MixedBases(base, g.base.clone()));
            }
        }
        let side = [base.clone()];
        let e: Vec<Family> = generators.iter().map(|g| vec![g.clone()]).collect();
        let orth = orthogonal_set(&e, &side, &bounds, fuel)?;
        let mut b = Self::from_orthogonal(base, orth.members, bounds, fuel)?;
        b.generators = generators;
        b.unknown += orth.unknown;
        Ok(b)
    }

    /// The behaviour whose orthogonal is `orthogonal`.
    pub fn from_orthogonal(
        base: Pitchfork,
        orthogonal: Vec<Family>,
        bounds: UniverseBounds,
        fuel: usize,
    ) -> Result<Self, BehaviourError> {
        let counter_side = dual_side(std::slice::from_ref(&base))?;
        let members = orthogonal_set(&orthogonal, &counter_side, &bounds, fuel)?;
        Ok(Behaviour {
            base,
            generators: Vec::new(),
            bounds,
            orthogonal,
            members: members.members.into_iter().map(|mut f| f.remove(0)).collect(),
            unknown: members.unknown,
            fuel,
        })
    }

    /// Orthogonality to every counter-family.
    pub fn membership(&self, d: &Design) -> Orthogonality {
        if d.base != self.base || d.validate().is_err() {
            return Orthogonality::No;
        }
        let mut verdict = Orthogonality::Yes;
        for f in &self.orthogonal {
            match converge(std::slice::from_ref(d), f, self.fuel) {
                Orthogonality::Yes => {}
                Orthogonality::No => return Orthogonality::No,
                Orthogonality::Unknown => verdict = Orthogonality::Unknown,
            }
        }
        verdict
    }

    /// The join of the parts of `d` used against each counter-family.
    pub fn incarnation(&self, d: &Design) -> Result<Design, BehaviourError> {
        match self.membership(d) {
            Orthogonality::Yes => {}
            Orthogonality::No => return Err(BehaviourError::NotAMember),
            Orthogonality::Unknown => return Err(BehaviourError::Unknown),
        }
        let root_only = prune_to_pairs(d, &BTreeMap::new()).expect("an empty trace fits every design").0;
        let mut acc = root_only;
        for f in &self.orthogonal {
            let refs: Vec<&Design> = std::iter::once(d).chain(f).collect();
            let trace = normalize_designs(&refs, self.fuel).trace;
            let (used, _) = prune_to_pairs(d, &trace_pairs(&trace)).expect("traces of d fit d");
            acc = join(&acc, &used).expect("prunings of one design have a join");
        }
        Ok(acc)
    }

    pub fn is_material(&self, d: &Design) -> Result<bool, BehaviourError> {
        Ok(self.incarnation(d)? == *d)
    }

    pub fn classify(&self, d: &Design) -> CandidateVerdict {
        match self.incarnation(d) {
            Err(BehaviourError::Unknown) => CandidateVerdict::Unknown(self.fuel),
            Err(_) => CandidateVerdict::NotInBehaviour,
            Ok(_) if d.contains_daimon() => CandidateVerdict::PseudoGround(PseudoReason::ContainsDaimon),
            Ok(inc) if inc != *d => CandidateVerdict::PseudoGround(PseudoReason::NotMaterial),
            Ok(_) => CandidateVerdict::Ground,
        }
    }

    /// The same behaviour with the prefix `from` replaced by `to`.
    pub fn relocate(&self, from: &Address, to: &Address) -> Behaviour {
        let all = |ds: &[Design]| ds.iter().map(|d| d.relocate(from, to)).collect::<Vec<_>>();
        Behaviour {
            base: self.base.relocate(from, to),
            generators: all(&self.generators),
            bounds: self.bounds.clone(),
            orthogonal: self.orthogonal.iter().map(|f| all(f)).collect(),
            members: all(&self.members),
            unknown: self.unknown,
            fuel: self.fuel,
        }
    }

    /// `|G|`: the material members.
    pub fn material_members(&self) -> Vec<Design> {
        self.members.iter().filter(|d| self.is_material(d).unwrap_or(false)).cloned().collect()
    }

    /// `|G|_F`: the material members without `†`.
    pub fn free_incarnation(&self) -> Vec<Design> {
        self.members.iter().filter(|d| !d.contains_daimon() && self.is_material(d).unwrap_or(false)).cloned().collect()
    }
}

/// `1 = {AtomicBomb}^⊥⊥`.
pub fn one(xi: &Address, bounds: UniverseBounds) -> Result<Behaviour, BehaviourError> {
    Behaviour::generate(vec![atomic_bomb(xi)], bounds, DEFAULT_FUEL)
}

/// `⊤ = {Skunk}^⊥⊥`.
pub fn top(xi: &Address, bounds: UniverseBounds) -> Result<Behaviour, BehaviourError> {
    Behaviour::generate(vec![skunk(xi)], bounds, DEFAULT_FUEL)
}

/// `0 = {†}^⊥⊥`.
pub fn zero(xi: &Address, bounds: UniverseBounds) -> Result<Behaviour, BehaviourError> {
    Behaviour::generate(vec![daimon_at(xi)], bounds, DEFAULT_FUEL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ludics::named::{fid_at, negative_sponge};

    fn xi() -> Address {
        Address::new(&[0])
    }

    #[test]
    fn depth_one_universe() {
        let u = enumerate_universe(&Pitchfork::positive([xi()]), &UniverseBounds::new(1, [Ramification::empty()])).unwrap();
        assert_eq!(u, vec![daimon_at(&xi()), fid_at(&xi()), atomic_bomb(&xi())]);
        let n = enumerate_universe(&Pitchfork::negative(xi(), []), &UniverseBounds::powerset(1, 1)).unwrap();
        assert_eq!(n, vec![skunk(&xi())]);
    }

    #[test]
    fn cap_is_enforced() {
        let mut b = UniverseBounds::powerset(3, 1);
        b.cap = 1000;
        assert_eq!(enumerate_universe(&Pitchfork::positive([xi()]), &b), Err(BehaviourError::TooLarge(1000)));
    }

    #[test]
    fn dual_sides() {
        let (a, b) = (Address::new(&[0]), Address::new(&[1]));
        let side = [Pitchfork::negative(a.clone(), [b.clone()])];
        let dual = dual_side(&side).unwrap();
        assert_eq!(dual, vec![Pitchfork::positive([a.clone()]), Pitchfork::negative(b.clone(), [])]);
        assert_eq!(dual_side(&dual).unwrap(), side);
    }

    #[test]
    fn small_named_behaviours() {
        let bounds = UniverseBounds::new(2, [Ramification::empty()]);
        let one = one(&xi(), bounds.clone()).unwrap();
        assert_eq!(one.orthogonal, vec![vec![negative_sponge(&xi(), [Ramification::empty()])]]);
        assert_eq!(one.members, vec![daimon_at(&xi()), atomic_bomb(&xi())]);
        assert_eq!(one.classify(&atomic_bomb(&xi())), CandidateVerdict::Ground);
        assert_eq!(one.classify(&daimon_at(&xi())), CandidateVerdict::PseudoGround(PseudoReason::ContainsDaimon));
        assert_eq!(one.classify(&skunk(&xi())), CandidateVerdict::NotInBehaviour);
        assert_eq!(one.free_incarnation(), vec![atomic_bomb(&xi())]);
        let zero = zero(&xi(), bounds).unwrap();
        assert_eq!(zero.members, vec![daimon_at(&xi())]);
        assert!(zero.free_incarnation().is_empty());
    }
}
