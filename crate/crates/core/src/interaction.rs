//! Cut-nets and their normalization.
//!
//! The engine keeps the current net as a list of slots borrowing subdesigns
//! of the original designs. Each step looks at the principal design: a
//! positive action on a cut address is matched with the branch of the same
//! ramification in the dual design, and both are replaced by their premises.
//! Uncut actions (open nets) are copied to the result and normalization
//! continues separately under each of them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::ludics::{Address, Body, Design, DesignError, Pitchfork, Ramification};

pub const DEFAULT_FUEL: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum NetError {
    #[error("a cut-net needs at least one design")]
    Empty,
    #[error("design {index}: {source}")]
    InvalidDesign { index: usize, source: DesignError },
    #[error("condition (1): base addresses {0} and {1} are neither disjoint nor equal")]
    Overlap(Address, Address),
    #[error("condition (2): address {0} occurs in more than two bases")]
    TooManyOccurrences(Address),
    #[error("condition (2): address {0} occurs twice with the same polarity")]
    SamePolarity(Address),
    #[error("condition (3): the cut graph is not connected")]
    Disconnected,
    #[error("condition (3): the cut graph has a cycle through {0}")]
    Cyclic(Address),
    #[error("designs on `{0}` and `{1}` are not dual (expected ⊢ξ and ξ ⊢)")]
    BaseMismatch(Pitchfork, Pitchfork),
    #[error("the net is open (base `{0}`)")]
    NotClosed(Pitchfork),
}

/// A validated cut-net.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutNet {
    designs: Vec<Design>,
    cuts: BTreeSet<Address>,
    principal: usize,
    base: Pitchfork,
}

impl CutNet {
    /// Checks the designs and the three cut-net conditions.
    pub fn new(designs: Vec<Design>) -> Result<Self, NetError> {
        if designs.is_empty() {
            return Err(NetError::Empty);
        }
        for (index, d) in designs.iter().enumerate() {
            d.validate().map_err(|source| NetError::InvalidDesign { index, source })?;
        }
        // (1)
        let all: Vec<&Address> = designs.iter().flat_map(|d| d.base.addresses()).collect();
        for (k, a) in all.iter().enumerate() {
            for b in &all[k + 1..] {
                if a != b && !a.disjoint(b) {
                    return Err(NetError::Overlap((*a).clone(), (*b).clone()));
                }
            }
        }
        // (2)
        let mut occurrences: BTreeMap<&Address, Vec<(usize, bool)>> = BTreeMap::new();
        for (k, d) in designs.iter().enumerate() {
            if let Some(n) = &d.base.negative {
                occurrences.entry(n).or_default().push((k, false));
            }
            for p in &d.base.positive {
                occurrences.entry(p).or_default().push((k, true));
            }
        }
        let mut cuts = BTreeSet::new();
        let mut parent: Vec<usize> = (0..designs.len()).collect();
        fn find(parent: &mut [usize], k: usize) -> usize {
            let mut r = k;
            while parent[r] != r {
                r = parent[r];
            }
            parent[k] = r;
            r
        }
        for (a, occ) in &occurrences {
            match occ.as_slice() {
                [_] => {}
                [(j, pj), (k, pk)] => {
                    if pj == pk {
                        return Err(NetError::SamePolarity((*a).clone()));
                    }
                    // (3): each cut is an edge; a repeated component is a cycle
                    let (rj, rk) = (find(&mut parent, *j), find(&mut parent, *k));
                    if rj == rk {
                        return Err(NetError::Cyclic((*a).clone()));
                    }
                    parent[rj] = rk;
                    cuts.insert((*a).clone());
                }
                _ => return Err(NetError::TooManyOccurrences((*a).clone())),
            }
        }
        let root = find(&mut parent, 0);
        if (1..designs.len()).any(|k| find(&mut parent, k) != root) {
            return Err(NetError::Disconnected);
        }
        let principal = designs
            .iter()
            .position(|d| d.base.negative.as_ref().is_none_or(|n| !cuts.contains(n)))
            .expect("a connected acyclic net has a principal design");
        let base = Pitchfork {
            negative: designs[principal].base.negative.clone(),
            positive: designs.iter().flat_map(|d| &d.base.positive).filter(|a| !cuts.contains(a)).cloned().collect(),
        };
        Ok(CutNet { designs, cuts, principal, base })
    }

    pub fn designs(&self) -> &[Design] {
        &self.designs
    }

    pub fn cuts(&self) -> &BTreeSet<Address> {
        &self.cuts
    }

    pub fn principal(&self) -> usize {
        self.principal
    }

    pub fn base(&self) -> &Pitchfork {
        &self.base
    }

    pub fn is_closed(&self) -> bool {
        self.base.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TraceEvent {
    /// A positive action on a cut matched with the dual negative branch.
    Pair { focus: Address, ram: Ramification },
    /// The principal design ended with `†` on this base.
    Daimon { base: Pitchfork },
    Fid { base: Pitchfork },
    NoMatch { focus: Address, ram: Ramification },
    /// Uncut positive action copied to the result.
    OpenPositive { focus: Address, ram: Ramification },
    /// Uncut negative rule copied to the result.
    OpenNegative { focus: Address },
}

impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceEvent::Pair { focus, ram } => write!(f, "+ {focus} {ram}\n- {focus} {ram}"),
            TraceEvent::Daimon { base } => write!(f, "† {base}"),
            TraceEvent::Fid { base } => write!(f, "Ω {base}"),
            TraceEvent::NoMatch { focus, ram } => write!(f, "+ {focus} {ram} unmatched"),
            TraceEvent::OpenPositive { focus, ram } => write!(f, "out + {focus} {ram}"),
            TraceEvent::OpenNegative { focus } => write!(f, "out - {focus}"),
        }
    }
}

/// Line records, one action per line.
pub fn trace_lines(trace: &[TraceEvent]) -> String {
    trace.iter().map(|e| format!("{e}\n")).collect()
}

/// Addresses the interaction went through: matched foci in order, then the
/// addresses of the final `†`.
pub fn visited_addresses(trace: &[TraceEvent]) -> Vec<Address> {
    let mut out = Vec::new();
    for e in trace {
        match e {
            TraceEvent::Pair { focus, .. } => out.push(focus.clone()),
            TraceEvent::Daimon { base } => out.extend(base.positive.iter().cloned()),
            _ => {}
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Divergence {
    NoMatchingNegativeAction,
    FidEncountered,
}

impl fmt::Display for Divergence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Divergence::NoMatchingNegativeAction => "no-matching-negative-action",
            Divergence::FidEncountered => "fid-encountered",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InteractionOutcome {
    Converged(Design),
    Diverged { at: Option<Address>, reason: Divergence },
    FuelExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InteractionResult {
    pub outcome: InteractionOutcome,
    pub trace: Vec<TraceEvent>,
}

impl InteractionResult {
    pub fn converged(&self) -> bool {
        matches!(self.outcome, InteractionOutcome::Converged(_))
    }

    pub fn pairs(&self) -> usize {
        self.trace.iter().filter(|e| matches!(e, TraceEvent::Pair { .. })).count()
    }
}

/// A design of the current net, with the index of the original design it
/// comes from.
#[derive(Clone, Copy, Debug)]
pub struct Slot<'a> {
    pub design: &'a Design,
    pub origin: usize,
}

fn principal_of(slots: &[Slot<'_>]) -> usize {
    slots
        .iter()
        .position(|s| match &s.design.base.negative {
            None => true,
            Some(n) => !slots.iter().any(|t| t.design.base.positive.contains(n)),
        })
        .expect("every net has a principal design")
}

/// Positive addresses of `slots` not cut against a negative one in `all`.
fn uncut(slots: &[Slot<'_>], all: &[Slot<'_>]) -> BTreeSet<Address> {
    let negatives: BTreeSet<&Address> = all.iter().filter_map(|s| s.design.base.negative.as_ref()).collect();
    slots.iter().flat_map(|s| &s.design.base.positive).filter(|a| !negatives.contains(a)).cloned().collect()
}

/// The base of the current net; `dangling` holds the uncut addresses of
/// designs cut off since the last rule was emitted.
fn base_of(slots: &[Slot<'_>], principal: usize, dangling: &BTreeSet<Address>) -> Pitchfork {
    let mut positive = uncut(slots, slots);
    positive.extend(dangling.iter().cloned());
    Pitchfork { negative: slots[principal].design.base.negative.clone(), positive }
}

/// What the principal design does next.
enum Next {
    Paired(Address, Ramification),
    Daimon,
    Fid,
    NoMatch(Address, Ramification),
    OpenPositive(usize),
    OpenNegative(usize),
}

/// Performs one matched pair in place, or reports why none is possible.
fn step(slots: &mut Vec<Slot<'_>>, dangling: &mut BTreeSet<Address>) -> Next {
    let p = principal_of(slots);
    let principal = slots[p];
    match &principal.design.body {
        Body::Daimon => Next::Daimon,
        Body::Fid => Next::Fid,
        Body::Negative { .. } => Next::OpenNegative(p),
        Body::Positive { focus, children } => {
            let Some(q) = slots.iter().position(|s| s.design.base.negative.as_ref() == Some(focus)) else {
                return Next::OpenPositive(p);
            };
            let ram: Ramification = children.keys().copied().collect();
            let branch = match &slots[q].design.body {
                Body::Negative { branches } => branches.get(&ram),
                _ => None,
            };
            let Some(branch) = branch else {
                return Next::NoMatch(focus.clone(), ram);
            };
            let partner_origin = slots[q].origin;
            let mut next = Vec::with_capacity(slots.len() + children.len());
            let mut start = 0;
            for (k, s) in slots.iter().enumerate() {
                if k == p {
                    next.extend(children.values().map(|c| Slot { design: c, origin: principal.origin }));
                } else if k == q {
                    start = next.len();
                    next.push(Slot { design: branch, origin: partner_origin });
                } else {
                    next.push(*s);
                }
            }
            // designs hanging from context the principal dropped are cut off,
            // their own uncut addresses stay in the base
            let keep = reachable(&next, start);
            let dropped: Vec<Slot<'_>> = next.iter().zip(&keep).filter(|(_, k)| !**k).map(|(s, _)| *s).collect();
            dangling.extend(uncut(&dropped, &next));
            *slots = next.into_iter().zip(keep).filter(|(_, k)| *k).map(|(s, _)| s).collect();
            Next::Paired(focus.clone(), ram)
        }
    }
}

fn linked(a: &Design, b: &Design) -> bool {
    a.base.negative.as_ref().is_some_and(|n| b.base.positive.contains(n))
        || b.base.negative.as_ref().is_some_and(|n| a.base.positive.contains(n))
}

/// Which slots are connected to `slots[start]` through cut addresses.
fn reachable(slots: &[Slot<'_>], start: usize) -> Vec<bool> {
    let mut seen = vec![false; slots.len()];
    seen[start] = true;
    let mut todo = vec![start];
    while let Some(k) = todo.pop() {
        for j in 0..slots.len() {
            if !seen[j] && linked(slots[k].design, slots[j].design) {
                seen[j] = true;
                todo.push(j);
            }
        }
    }
    seen
}

/// Slots reachable from `start` through cut addresses.
fn component<'a>(slots: &[Slot<'a>], start: Slot<'a>) -> Vec<Slot<'a>> {
    let mut taken = vec![false; slots.len()];
    let mut out = vec![start];
    let mut k = 0;
    while k < out.len() {
        let cur = out[k].design;
        for (j, s) in slots.iter().enumerate() {
            if taken[j] {
                continue;
            }
            if linked(cur, s.design) {
                taken[j] = true;
                out.push(*s);
            }
        }
        k += 1;
    }
    out
}

struct Run {
    fuel: usize,
    trace: Vec<TraceEvent>,
    divergence: Option<(Option<Address>, Divergence)>,
}

struct OutOfFuel;

impl Run {
    fn normalize(&mut self, mut slots: Vec<Slot<'_>>, mut dangling: BTreeSet<Address>) -> Result<Design, OutOfFuel> {
        loop {
            if self.fuel == 0 {
                return Err(OutOfFuel);
            }
            let p = principal_of(&slots);
            match step(&mut slots, &mut dangling) {
                Next::Paired(focus, ram) => {
                    self.fuel -= 1;
                    self.trace.push(TraceEvent::Pair { focus, ram });
                }
                Next::Daimon => {
                    self.trace.push(TraceEvent::Daimon { base: slots[p].design.base.clone() });
                    return Ok(Design::daimon(base_of(&slots, p, &dangling)));
                }
                Next::Fid => {
                    self.trace.push(TraceEvent::Fid { base: slots[p].design.base.clone() });
                    self.divergence.get_or_insert((None, Divergence::FidEncountered));
                    return Ok(Design::fid(base_of(&slots, p, &dangling)));
                }
                Next::NoMatch(focus, ram) => {
                    self.trace.push(TraceEvent::NoMatch { focus: focus.clone(), ram });
                    self.divergence.get_or_insert((Some(focus), Divergence::NoMatchingNegativeAction));
                    return Ok(Design::fid(base_of(&slots, p, &dangling)));
                }
                Next::OpenPositive(p) => {
                    let base = base_of(&slots, p, &dangling);
                    let Body::Positive { focus, children } = &slots[p].design.body else { unreachable!() };
                    let ram = children.keys().copied().collect();
                    self.trace.push(TraceEvent::OpenPositive { focus: focus.clone(), ram });
                    let origin = slots[p].origin;
                    let rest: Vec<Slot<'_>> =
                        slots.iter().enumerate().filter(|(k, _)| *k != p).map(|(_, s)| *s).collect();
                    let mut out = BTreeMap::new();
                    for (i, c) in children {
                        let sub = component(&rest, Slot { design: c, origin });
                        out.insert(*i, self.normalize(sub, BTreeSet::new())?);
                    }
                    return Ok(Design::positive(base, focus.clone(), out));
                }
                Next::OpenNegative(p) => {
                    let base = base_of(&slots, p, &dangling);
                    let Body::Negative { branches } = &slots[p].design.body else { unreachable!() };
                    self.trace.push(TraceEvent::OpenNegative { focus: base.negative.clone().unwrap_or_default() });
                    let origin = slots[p].origin;
                    let mut out = BTreeMap::new();
                    for (ram, b) in branches {
                        let mut sub = slots.clone();
                        sub[p] = Slot { design: b, origin };
                        // a branch ending in Ω is no branch at all
                        let r = self.normalize(sub, BTreeSet::new())?;
                        if !r.is_fid() {
                            out.insert(ram.clone(), r);
                        }
                    }
                    return Ok(Design::negative(base, out));
                }
            }
        }
    }
}

/// Normalizes designs assumed to form a valid cut-net (see [`CutNet::new`]).
/// `fuel` bounds the number of matched pairs.
pub fn normalize_designs(designs: &[&Design], fuel: usize) -> InteractionResult {
    let slots = designs.iter().enumerate().map(|(origin, d)| Slot { design: d, origin }).collect();
    normalize_slots(slots, BTreeSet::new(), fuel)
}

fn normalize_slots(slots: Vec<Slot<'_>>, dangling: BTreeSet<Address>, fuel: usize) -> InteractionResult {
    let mut run = Run { fuel, trace: Vec::new(), divergence: None };
    let outcome = match run.normalize(slots, dangling) {
        Err(OutOfFuel) => InteractionOutcome::FuelExhausted,
        Ok(d) if d.is_fid() => {
            let (at, reason) = run.divergence.clone().unwrap_or((None, Divergence::FidEncountered));
            InteractionOutcome::Diverged { at, reason }
        }
        Ok(d) => InteractionOutcome::Converged(d),
    };
    InteractionResult { outcome, trace: run.trace }
}

/// Normalization of a cut-net. On a closed net a convergent run yields `†`
/// on the empty base; open nets yield a design on the net's base.
pub fn normalize(net: &CutNet, fuel: usize) -> InteractionResult {
    let refs: Vec<&Design> = net.designs.iter().collect();
    normalize_designs(&refs, fuel)
}

/// [`normalize`] restricted to closed nets.
pub fn normalize_closed(net: &CutNet, fuel: usize) -> Result<InteractionResult, NetError> {
    if !net.is_closed() {
        return Err(NetError::NotClosed(net.base.clone()));
    }
    Ok(normalize(net, fuel))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orthogonality {
    Yes,
    No,
    Unknown,
}

impl Orthogonality {
    pub fn of(result: &InteractionResult) -> Self {
        match result.outcome {
            InteractionOutcome::Converged(_) => Orthogonality::Yes,
            InteractionOutcome::Diverged { .. } => Orthogonality::No,
            InteractionOutcome::FuelExhausted => Orthogonality::Unknown,
        }
    }
}

impl fmt::Display for Orthogonality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orthogonality::Yes => "yes",
            Orthogonality::No => "no",
            Orthogonality::Unknown => "unknown",
        })
    }
}

/// Whether `{d, e}` converges; the bases must be `⊢ξ` and `ξ ⊢`.
pub fn orthogonal(d: &Design, e: &Design, fuel: usize) -> Result<Orthogonality, NetError> {
    let dual = |p: &Pitchfork, n: &Pitchfork| {
        p.negative.is_none()
            && p.positive.len() == 1
            && n.positive.is_empty()
            && n.negative.as_ref().is_some_and(|x| p.positive.contains(x))
    };
    if !dual(&d.base, &e.base) && !dual(&e.base, &d.base) {
        return Err(NetError::BaseMismatch(d.base.clone(), e.base.clone()));
    }
    Ok(Orthogonality::of(&normalize_designs(&[d, e], fuel)))
}

/// Orthogonality of `d` against a family of designs that together with it
/// forms a closed net.
pub fn orthogonal_family(d: &Design, family: &[Design], fuel: usize) -> Result<Orthogonality, NetError> {
    let net = CutNet::new(std::iter::once(d.clone()).chain(family.iter().cloned()).collect())?;
    if !net.is_closed() {
        return Err(NetError::NotClosed(net.base.clone()));
    }
    Ok(Orthogonality::of(&normalize(&net, fuel)))
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("trace does not fit the design: {0}")]
pub struct TraceMismatch(pub String);

/// Matched actions of a trace, by address.
pub fn trace_pairs(trace: &[TraceEvent]) -> BTreeMap<Address, Ramification> {
    trace
        .iter()
        .filter_map(|e| match e {
            TraceEvent::Pair { focus, ram } => Some((focus.clone(), ram.clone())),
            _ => None,
        })
        .collect()
}

/// Prunes `d` to the actions in `pairs`: negative rules keep only the
/// branches taken, unreached negative rules lose all branches. Returns the
/// pruning and the number of actions of `pairs` found in `d`.
pub fn prune_to_pairs(d: &Design, pairs: &BTreeMap<Address, Ramification>) -> Result<(Design, usize), TraceMismatch> {
    match &d.body {
        Body::Daimon | Body::Fid => Ok((d.clone(), 0)),
        Body::Positive { focus, children } => {
            let mut used = 0;
            if let Some(r) = pairs.get(focus) {
                if !r.0.iter().eq(children.keys()) {
                    return Err(TraceMismatch(format!("{focus} played with {r} but the design plays {}", d.ramification().unwrap_or_default())));
                }
                used = 1;
            }
            let mut kept = BTreeMap::new();
            for (i, c) in children {
                let (p, n) = prune_to_pairs(c, pairs)?;
                used += n;
                kept.insert(*i, p);
            }
            Ok((Design::positive(d.base.clone(), focus.clone(), kept), used))
        }
        Body::Negative { branches } => {
            let xi = d.base.negative.as_ref().expect("negative rules sit on negative pitchforks");
            let mut kept = BTreeMap::new();
            let mut used = 0;
            if let Some(r) = pairs.get(xi) {
                let Some(b) = branches.get(r) else {
                    return Err(TraceMismatch(format!("no branch {r} at {xi}")));
                };
                let (p, n) = prune_to_pairs(b, pairs)?;
                kept.insert(r.clone(), p);
                used = 1 + n;
            }
            Ok((Design::negative(d.base.clone(), kept), used))
        }
    }
}

/// The part of `d` consumed by a two-design normalization with trace `trace`.
pub fn used_part(d: &Design, trace: &[TraceEvent]) -> Result<Design, TraceMismatch> {
    let pairs = trace_pairs(trace);
    let (p, used) = prune_to_pairs(d, &pairs)?;
    if used != pairs.len() {
        return Err(TraceMismatch(format!("{} of {} actions found in the design", used, pairs.len())));
    }
    Ok(p)
}

/// Step-by-step normalization of a net, keeping every intermediate net.
#[derive(Clone, Debug)]
pub struct Stepper<'a> {
    states: Vec<Vec<Slot<'a>>>,
    dangling: Vec<BTreeSet<Address>>,
    trace: Vec<TraceEvent>,
    fuel: usize,
    finished: Option<InteractionResult>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepReport {
    Paired(TraceEvent),
    Finished(InteractionResult),
}

impl<'a> Stepper<'a> {
    pub fn new(net: &'a CutNet, fuel: usize) -> Self {
        let slots = net.designs.iter().enumerate().map(|(origin, design)| Slot { design, origin }).collect();
        Stepper { states: vec![slots], dangling: vec![BTreeSet::new()], trace: Vec::new(), fuel, finished: None }
    }

    pub fn current(&self) -> &[Slot<'a>] {
        self.states.last().expect("states are nonempty")
    }

    pub fn states(&self) -> &[Vec<Slot<'a>>] {
        &self.states
    }

    pub fn trace(&self) -> &[TraceEvent] {
        &self.trace
    }

    pub fn result(&self) -> Option<&InteractionResult> {
        self.finished.as_ref()
    }

    /// One matched pair; at the end, the result of normalizing what remains.
    pub fn step(&mut self) -> StepReport {
        if let Some(r) = &self.finished {
            return StepReport::Finished(r.clone());
        }
        let pairs = self.states.len() - 1;
        let mut slots = self.current().to_vec();
        let mut dangling = self.dangling[pairs].clone();
        if pairs < self.fuel {
            if let Next::Paired(focus, ram) = step(&mut slots, &mut dangling) {
                let event = TraceEvent::Pair { focus, ram };
                self.trace.push(event.clone());
                self.states.push(slots);
                self.dangling.push(dangling);
                return StepReport::Paired(event);
            }
        }
        let rest = normalize_slots(self.current().to_vec(), self.dangling[pairs].clone(), self.fuel - pairs);
        let mut trace = self.trace.clone();
        trace.extend(rest.trace);
        let result = InteractionResult { outcome: rest.outcome, trace };
        self.finished = Some(result.clone());
        StepReport::Finished(result)
    }

    /// Undoes the last pair; false at the initial net.
    pub fn back(&mut self) -> bool {
        self.finished = None;
        if self.states.len() == 1 {
            return false;
        }
        self.states.pop();
        self.dangling.pop();
        self.trace.pop();
        true
    }

    pub fn run(mut self) -> InteractionResult {
        loop {
            if let StepReport::Finished(r) = self.step() {
                return r;
            }
        }
    }
}

/// Every intermediate net of the normalization, then the result.
pub fn snapshots(net: &CutNet, fuel: usize) -> (Vec<Vec<Design>>, InteractionResult) {
    let mut stepper = Stepper::new(net, fuel);
    let result = loop {
        if let StepReport::Finished(r) = stepper.step() {
            break r;
        }
    };
    let states = stepper.states.iter().map(|s| s.iter().map(|slot| slot.design.clone()).collect()).collect();
    (states, result)
}

/// Snapshots as indented trees, visited addresses marked with `*`.
pub fn render_snapshots(states: &[Vec<Design>], result: &InteractionResult) -> String {
    let marked: BTreeSet<Address> = visited_addresses(&result.trace).into_iter().collect();
    let mut out = String::new();
    for (k, state) in states.iter().enumerate() {
        out.push_str(&render_snapshot(k + 1, state, &marked));
    }
    out.push_str(&format!("snapshot {}\n", states.len() + 1));
    out.push_str(&render_outcome(&result.outcome, &marked));
    out
}

/// One numbered snapshot of a net.
pub fn render_snapshot(number: usize, state: &[Design], marked: &BTreeSet<Address>) -> String {
    use crate::ludics::render::render_design;
    let mut out = format!("snapshot {number}\n");
    for d in state {
        out.push_str(&render_design(d, marked, 2));
    }
    out
}

/// The last snapshot: the resulting design, or why there is none.
pub fn render_outcome(outcome: &InteractionOutcome, marked: &BTreeSet<Address>) -> String {
    match outcome {
        InteractionOutcome::Converged(d) => crate::ludics::render::render_design(d, marked, 2),
        InteractionOutcome::Diverged { at, reason } => {
            let at = at.as_ref().map(|a| format!(" at {a}")).unwrap_or_default();
            format!("  diverged{at}: {reason}\n")
        }
        InteractionOutcome::FuelExhausted => "  fuel exhausted\n".to_owned(),
    }
}
