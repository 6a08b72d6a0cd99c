//! One check per acceptance criterion, plus the property checks they rely
//! on. Each returns a one-line summary or the reason it failed.

use std::collections::{BTreeSet, HashSet};
use std::time::Instant;

use grounds::background::Formula;
use grounds::behaviour::{
    enumerate_universe, one, orthogonal_set, top, zero, Behaviour, CandidateVerdict, Family, PseudoReason,
    UniverseBounds,
};
use grounds::focusing::text::{parse_sequent_file, parse_strategy_file};
use grounds::focusing::{derivation_to_strategy, focused_search, strategy_to_derivation, SearchConfig, SearchOutcome};
use grounds::ground::text::parse_ground_file;
use grounds::ground::{normalize, reduce_step, typecheck, GroundTerm, Language, Outcome, TypedVar, DEFAULT_FUEL};
use grounds::interaction::{
    normalize_closed, normalize_designs, orthogonal, render_snapshots, snapshots, visited_addresses, CutNet,
    Divergence, InteractionOutcome, TraceEvent,
};
use grounds::ludics::named::{atomic_bomb, daimon_at, fax_over, skunk};
use grounds::ludics::text::parse_designs;
use grounds::ludics::{is_subdesign, prune_positive_levels, Address, Body, Design, Pitchfork, Ramification};
use grounds::translation::{arrow, check_translation, translate, Site, TranslationEnv};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::oracle::{naive_play, End};
use super::terms::{a, random_term, random_type};
use super::{golden, read_sample};

pub type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn xi() -> Address {
    Address::new(&[0])
}

fn identity(ty: Formula) -> GroundTerm {
    let x = TypedVar::new("ξ", None, ty);
    GroundTerm::impl_i(&x, GroundTerm::var(&x))
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

pub fn worked_reduction() -> Check {
    let file = parse_ground_file(&read_sample("worked.gt")).map_err(err)?;
    let start = Instant::now();
    let r = normalize(&file.terms[0], &file.language, DEFAULT_FUEL);
    let elapsed = start.elapsed();
    ensure!(r.outcome == Outcome::Canonical(identity(a())), "normal form {:?}", r.outcome);
    let names: Vec<&str> = r.trace.iter().map(|s| s.equation.as_str()).collect();
    ensure!(names == ["→E", "∨E"], "equations {names:?}");
    ensure!(elapsed.as_millis() < 10, "took {elapsed:?}");
    Ok(format!("→E then ∨E to {} in {elapsed:?}", identity(a())))
}

pub fn open_typing() -> Check {
    let file = parse_ground_file(&read_sample("worked-open.gt")).map_err(err)?;
    let ty = typecheck(&file.terms[0], &file.language).map_err(err)?;
    ensure!(ty.to_string() == "A → A ⊢ A → A", "typed {ty}");
    Ok(format!("typed {ty}"))
}

pub fn disjunctive_syllogism() -> Check {
    let file = parse_ground_file(&read_sample("ds.gt")).map_err(err)?;
    let lang = &file.language;
    let mut fired = Vec::new();
    for t in &file.terms[..2] {
        let (_, step) = reduce_step(t, lang).ok_or_else(|| format!("`{t}` does not reduce"))?;
        fired.push(step.equation);
    }
    ensure!(fired == ["DS₁", "DS₂"], "fired {fired:?}");
    let stuck = normalize(&file.terms[2], lang, DEFAULT_FUEL);
    ensure!(matches!(stuck.outcome, Outcome::Stuck(_)), "third term gave {:?}", stuck.outcome);
    Ok("DS₁ and DS₂ fire; DS on a variable is Stuck".into())
}

pub fn ping_pong() -> Check {
    let file = parse_ground_file(&read_sample("pingpong.gt")).map_err(err)?;
    let r = normalize(&file.terms[0], &file.language, DEFAULT_FUEL);
    ensure!(matches!(r.outcome, Outcome::Loop(_)), "outcome {:?}", r.outcome);
    ensure!(r.trace.len() <= 4, "{} steps", r.trace.len());
    Ok(format!("Loop after {} steps", r.trace.len()))
}

pub fn sample_interaction() -> Check {
    let net = CutNet::new(parse_designs(&read_sample("two-pairs.net")).map_err(err)?).map_err(err)?;
    let r = normalize_closed(&net, DEFAULT_FUEL).map_err(err)?;
    ensure!(r.outcome == InteractionOutcome::Converged(Design::daimon(Pitchfork::default())), "{:?}", r.outcome);
    let order: Vec<String> = r
        .trace
        .iter()
        .filter_map(|e| match e {
            TraceEvent::Pair { focus, .. } => Some(focus.to_string()),
            TraceEvent::Daimon { base } => base.positive.iter().next().map(|a| a.to_string()),
            _ => None,
        })
        .collect();
    ensure!(order == ["0", "0.1", "0.1.1"], "focus order {order:?}");
    let visited = visited_addresses(&r.trace);
    for never in [Address::new(&[0, 1, 3]), Address::new(&[0, 2]), Address::new(&[0, 2, 0])] {
        ensure!(!visited.contains(&never), "{never} visited");
    }
    let (states, result) = snapshots(&net, DEFAULT_FUEL);
    let rendered = render_snapshots(&states, &result);
    let expected = std::fs::read_to_string(golden("two-pairs.snapshots")).map_err(err)?;
    ensure!(rendered == expected, "snapshots differ from the golden file");
    Ok(format!("Daimon via {}; {} snapshots match", order.join(", "), states.len() + 1))
}

fn firsts(fs: &[Family]) -> Vec<Design> {
    fs.iter().map(|f| f[0].clone()).collect()
}

/// Every part of the claim is computed; the first mismatch is reported with
/// the sizes that explain it.
pub fn named_behaviours() -> Check {
    let start = Instant::now();
    let bounds = UniverseBounds::powerset(3, 1);
    let pos_side = [Pitchfork::positive([xi()])];
    let neg_side = [Pitchfork::negative(xi(), [])];
    let all_neg = enumerate_universe(&neg_side[0], &bounds).map_err(err)?;
    let (mut problems, mut held) = (Vec::new(), Vec::new());

    let bomb_orth = firsts(&orthogonal_set(&[vec![atomic_bomb(&xi())]], &pos_side, &bounds, DEFAULT_FUEL).map_err(err)?.members);
    let displayed = Design::negative(
        neg_side[0].clone(),
        [(Ramification::empty(), Design::daimon(Pitchfork::default()))].into(),
    );
    if bomb_orth != [displayed.clone()] {
        let dagger_on_empty = bomb_orth.iter().all(|n| {
            matches!(&n.body, Body::Negative { branches }
                if branches.get(&Ramification::empty()).is_some_and(Design::is_daimon))
        });
        problems.push(format!(
            "{{bomb}}^⊥ has {} designs, not 1: the bomb only visits the ∅ branch, so every negative design with † there \
             ({}) is orthogonal whatever its other branches; the displayed design is {}a member",
            bomb_orth.len(),
            if dagger_on_empty { "all of them have it" } else { "but some do not" },
            if bomb_orth.contains(&displayed) { "" } else { "not " },
        ));
    } else {
        held.push("{bomb}^⊥ is the displayed design".to_owned());
    }
    let one = one(&xi(), bounds.clone()).map_err(err)?;
    if one.members != [daimon_at(&xi()), atomic_bomb(&xi())] {
        problems.push(format!("{{bomb}}^⊥⊥ has {} members", one.members.len()));
    } else {
        held.push("{bomb}^⊥⊥ = {daimon, bomb}".to_owned());
    }
    let skunk_orth = firsts(&orthogonal_set(&[vec![skunk(&xi())]], &neg_side, &bounds, DEFAULT_FUEL).map_err(err)?.members);
    if skunk_orth != [daimon_at(&xi())] {
        problems.push(format!("{{skunk}}^⊥ has {} members", skunk_orth.len()));
    } else {
        held.push("{skunk}^⊥ = {daimon}".to_owned());
    }
    let daimon_orth = firsts(&orthogonal_set(&[vec![daimon_at(&xi())]], &pos_side, &bounds, DEFAULT_FUEL).map_err(err)?.members);
    if daimon_orth != all_neg || !daimon_orth.contains(&skunk(&xi())) {
        problems.push(format!("daimon^⊥ has {} of {} negative designs", daimon_orth.len(), all_neg.len()));
    } else {
        held.push(format!("daimon^⊥ = all {} negative designs, skunk included", all_neg.len()));
    }
    let t = top(&xi(), bounds).map_err(err)?;
    let mut wrong = None;
    for d in &t.members {
        if t.incarnation(d).map_err(err)? != skunk(&xi()) {
            wrong = Some(d);
            break;
        }
    }
    match wrong {
        Some(d) => problems.push(format!("a ⊤ member incarnates to something other than the skunk: {d:?}")),
        None => held.push(format!("all {} ⊤ members incarnate to the skunk", t.members.len())),
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs() >= 60 {
        problems.push(format!("took {elapsed:?}"));
    }
    if problems.is_empty() {
        Ok(format!("{} in {elapsed:?}", held.join("; ")))
    } else if held.is_empty() {
        Err(format!("{} ({elapsed:?})", problems.join("; ")))
    } else {
        Err(format!("{} (holding: {}; {elapsed:?})", problems.join("; "), held.join("; ")))
    }
}

fn unit_env(depth: usize) -> Result<TranslationEnv, String> {
    let bounds = UniverseBounds::powerset(depth, 1);
    let mut env = TranslationEnv::new(bounds.clone());
    env.atoms.insert("0".into(), zero(&Address::root(), bounds.clone()).map_err(err)?);
    env.atoms.insert("1".into(), one(&Address::root(), bounds).map_err(err)?);
    Ok(env)
}

/// `0 → 0` is read with the `|G^A|_F` definition: `|0|_F` is empty, every
/// design qualifies, and Fax is not material there.
pub fn fax() -> Check {
    let (x, y) = (Address::new(&[0]), Address::new(&[1]));
    let mut env = unit_env(2)?;
    let copy = fax_over(&x, &y, env.fax_depth, &env.bounds.pool);
    let r = normalize_designs(&[&daimon_at(&x), &copy], DEFAULT_FUEL);
    ensure!(r.outcome == InteractionOutcome::Converged(daimon_at(&y)), "Fax against † gave {:?}", r.outcome);
    let t = identity(Formula::Absurd);
    let tr = translate(&t, &mut env).map_err(err)?;
    let Site::Arrow(a, b) = &tr.site else { return Err(format!("translated onto {:?}", tr.site)) };
    ensure!(tr.design == fax_over(a, b, env.fax_depth, &env.bounds.pool), "translation is not Fax");
    let dom = env.atom_at(&Formula::Absurd, a).map_err(err)?;
    let cod = env.atom_at(&Formula::Absurd, b).map_err(err)?;
    let arr = arrow(&dom, &cod, &env.bounds).map_err(err)?;
    let universe = enumerate_universe(&tr.site.base(), &env.bounds).map_err(err)?;
    ensure!(arr.defining == universe, "defining set of 0→0 is not the whole universe");
    let verdict = check_translation(&t, &tr.design, &env).map_err(err)?;
    ensure!(verdict == CandidateVerdict::PseudoGround(PseudoReason::NotMaterial), "Fax classified {verdict:?}");
    Ok(format!("† ⊢ {y} out of Fax; translate(→Iξ⁰(ξ⁰)) = Fax; in 0→0: {verdict:?}"))
}

pub fn unit_verdicts() -> Check {
    let bounds = UniverseBounds::powerset(3, 1);
    let one = one(&xi(), bounds.clone()).map_err(err)?;
    let zero = zero(&xi(), bounds).map_err(err)?;
    let got = [
        one.classify(&atomic_bomb(&xi())),
        one.classify(&daimon_at(&xi())),
        zero.classify(&daimon_at(&xi())),
    ];
    let dagger = CandidateVerdict::PseudoGround(PseudoReason::ContainsDaimon);
    ensure!(got == [CandidateVerdict::Ground, dagger, dagger], "verdicts {got:?}");
    Ok(format!("bomb in 1: {:?}; † in 1 and 0: {:?}", got[0], got[1]))
}

pub fn focusing() -> Check {
    let seq = parse_sequent_file(&read_sample("clusters.frm")).map_err(err)?;
    let expected = parse_strategy_file(&read_sample("clusters.stg")).map_err(err)?;
    let Ok(SearchOutcome::Found(d)) = focused_search(&seq, SearchConfig::default()) else {
        return Err("no derivation found".into());
    };
    let back = strategy_to_derivation(&expected).map_err(err)?;
    ensure!(back == d, "strategy rebuilds\n{back}instead of\n{d}");
    let clusters = (d.premises.len(), d.premises.iter().map(|p| p.premises.len()).collect::<Vec<_>>());
    ensure!(clusters == (2, vec![2, 2]), "cluster shape {clusters:?}");
    let s = derivation_to_strategy(&d);
    ensure!(s == expected, "strategy is\n{s}");
    Ok(format!("{} games, {} maximal; the round trip is exact", s.games.len(), s.maximal_games().len()))
}

pub fn oracle_agreement() -> Check {
    let start = Instant::now();
    let bounds = UniverseBounds::powerset(2, 1);
    let pos = enumerate_universe(&Pitchfork::positive([xi()]), &bounds).map_err(err)?;
    let neg = enumerate_universe(&Pitchfork::negative(xi(), []), &bounds).map_err(err)?;
    let mut nets = 0;
    for p in &pos {
        for n in &neg {
            let ours = normalize_closed(&CutNet::new(vec![p.clone(), n.clone()]).map_err(err)?, DEFAULT_FUEL).map_err(err)?;
            let (play, end) = naive_play(p, n, 1000);
            let pairs: Vec<_> = ours
                .trace
                .iter()
                .filter_map(|e| match e {
                    TraceEvent::Pair { focus, ram } => Some((focus.clone(), ram.clone())),
                    _ => None,
                })
                .collect();
            ensure!(pairs == play, "plays differ on {p:?} against {n:?}");
            let same_end = match (&ours.outcome, &end) {
                (InteractionOutcome::Converged(d), End::Daimon) => d.is_daimon() && d.base.is_empty(),
                (InteractionOutcome::Diverged { reason, .. }, End::Fid) => *reason == Divergence::FidEncountered,
                (InteractionOutcome::Diverged { reason, .. }, End::NoMatch) => {
                    *reason == Divergence::NoMatchingNegativeAction
                }
                _ => false,
            };
            ensure!(same_end, "{:?} against oracle {end:?} on {p:?} / {n:?}", ours.outcome);
            nets += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed.as_secs() < 300, "took {elapsed:?}");
    Ok(format!("{nets}/{nets} nets agree in {elapsed:?}"))
}

pub fn subject_reduction(terms: usize, seed: u64) -> Check {
    let lang = Language::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut steps = 0;
    for n in 0..terms {
        let ty = random_type(&mut rng, 2);
        let size = rng.gen_range(1..12);
        let t = random_term(&mut rng, &ty, &[], size);
        typecheck(&t, &lang).map_err(|e| format!("term {n} `{t}`: {e}"))?;
        let free = t.free_vars();
        let mut cur = t;
        for _ in 0..40 {
            let Some((next, step)) = reduce_step(&cur, &lang) else { break };
            let after = typecheck(&next, &lang).map_err(|e| format!("`{cur}` --{}--> `{next}`: {e}", step.equation))?;
            ensure!(after.succedent.alpha_eq(&ty), "`{next}` changed type to {}", after.succedent);
            ensure!(next.free_vars().is_subset(&free), "`{next}` gained free variables");
            cur = next;
            steps += 1;
        }
    }
    Ok(format!("{terms} terms, {steps} steps"))
}

fn depth_two() -> Result<(Vec<Design>, Vec<Design>), String> {
    let bounds = UniverseBounds::powerset(2, 1);
    Ok((
        enumerate_universe(&Pitchfork::positive([xi()]), &bounds).map_err(err)?,
        enumerate_universe(&Pitchfork::negative(xi(), []), &bounds).map_err(err)?,
    ))
}

pub fn symmetry() -> Check {
    let (pos, neg) = depth_two()?;
    for p in &pos {
        for n in &neg {
            ensure!(orthogonal(p, n, DEFAULT_FUEL) == orthogonal(n, p, DEFAULT_FUEL), "asymmetric on {p:?} / {n:?}");
        }
    }
    Ok(format!("{} pairs", pos.len() * neg.len()))
}

fn orth_of(e: &[Design], side: &Pitchfork) -> Result<Vec<Design>, String> {
    let families: Vec<Family> = e.iter().map(|d| vec![d.clone()]).collect();
    let bounds = UniverseBounds::powerset(2, 1);
    Ok(firsts(&orthogonal_set(&families, std::slice::from_ref(side), &bounds, DEFAULT_FUEL).map_err(err)?.members))
}

fn random_subset<R: Rng>(rng: &mut R, universe: &[Design]) -> Vec<Design> {
    let p = rng.gen_range(0.0..0.5);
    universe.iter().filter(|_| rng.gen_bool(p)).cloned().collect()
}

fn sides() -> (Pitchfork, Pitchfork) {
    (Pitchfork::positive([xi()]), Pitchfork::negative(xi(), []))
}

pub fn antitonicity(samples: usize, seed: u64) -> Check {
    let (pos, neg) = depth_two()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let negative = rng.gen_bool(0.5);
        let (universe, side) = if negative { (&neg, sides().1) } else { (&pos, sides().0) };
        let big = random_subset(&mut rng, universe);
        let small: Vec<Design> = big.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
        let (small_orth, big_orth) = (orth_of(&small, &side)?, orth_of(&big, &side)?);
        ensure!(big_orth.iter().all(|d| small_orth.contains(d)), "E ⊆ F but F^⊥ ⊄ E^⊥ for |E| = {}", small.len());
    }
    Ok(format!("{samples} pairs E ⊆ F"))
}

pub fn triple_orthogonal(samples: usize, seed: u64) -> Check {
    let (pos, neg) = depth_two()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let negative = rng.gen_bool(0.5);
        let (p, n) = sides();
        let (universe, side, dual) = if negative { (&neg, n, p) } else { (&pos, p, n) };
        let e = random_subset(&mut rng, universe);
        let once = orth_of(&e, &side)?;
        let twice = orth_of(&once, &dual)?;
        ensure!(orth_of(&twice, &side)? == once, "E^⊥⊥⊥ ≠ E^⊥ for |E| = {}", e.len());
        ensure!(e.iter().all(|d| twice.contains(d)), "E ⊄ E^⊥⊥");
    }
    Ok(format!("{samples} sets"))
}

pub fn incarnation(samples: usize, seed: u64) -> Check {
    let (pos, neg) = depth_two()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    for _ in 0..samples {
        let universe = if rng.gen_bool(0.5) { &neg } else { &pos };
        let gens: Vec<Design> = random_subset(&mut rng, universe).into_iter().filter(|d| !d.is_fid()).collect();
        if gens.is_empty() {
            continue;
        }
        let b = Behaviour::generate(gens, UniverseBounds::powerset(2, 1), DEFAULT_FUEL).map_err(err)?;
        for d in &b.members {
            let inc = b.incarnation(d).map_err(err)?;
            ensure!(is_subdesign(&inc, d) && b.members.contains(&inc), "incarnation of {d:?} is not a member below it");
            ensure!(b.incarnation(&inc).map_err(err)? == inc, "incarnation is not idempotent on {d:?}");
            for e in b.members.iter().filter(|e| is_subdesign(e, d)) {
                ensure!(is_subdesign(&inc, e), "{e:?} is a smaller member than the incarnation of {d:?}");
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} members of {samples} behaviours"))
}

fn random_ram<R: Rng>(rng: &mut R) -> Ramification {
    // mostly inside the pool 𝒫({0, 1}), sometimes using 2
    let top = if rng.gen_bool(0.1) { 3 } else { 2 };
    (0..top).filter(|_| rng.gen_bool(0.5)).collect()
}

fn random_positive<R: Rng>(rng: &mut R, ctx: &BTreeSet<Address>, depth: usize) -> Design {
    let base = Pitchfork::positive(ctx.iter().cloned());
    let roll = rng.gen_range(0..10);
    if ctx.is_empty() || depth == 0 || roll < 2 {
        return if rng.gen_bool(0.5) { Design::daimon(base) } else { Design::fid(base) };
    }
    if roll == 2 {
        // a negative rule on a positive base
        return Design::negative(base, Default::default());
    }
    let addrs: Vec<&Address> = ctx.iter().collect();
    let focus = (*addrs.choose(rng).unwrap()).clone();
    let ram = random_ram(rng);
    let mut parts = vec![BTreeSet::new(); ram.len()];
    for a in ctx.iter().filter(|a| **a != focus) {
        let k = rng.gen_range(0..=ram.len());
        if k < ram.len() {
            parts[k].insert(a.clone());
        }
    }
    let children = ram
        .iter()
        .zip(parts)
        .map(|(i, part)| {
            let at = if rng.gen_bool(0.03) { focus.child(i + 1) } else { focus.child(i) };
            (i, random_negative(rng, &at, &part, depth - 1))
        })
        .collect();
    Design::positive(base, focus, children)
}

fn random_negative<R: Rng>(rng: &mut R, xi: &Address, ctx: &BTreeSet<Address>, depth: usize) -> Design {
    let base = Pitchfork::negative(xi.clone(), ctx.iter().cloned());
    if depth == 0 || rng.gen_bool(0.05) {
        return if rng.gen_bool(0.5) { Design::daimon(base) } else { Design::fid(base) };
    }
    let n = rng.gen_range(0..4);
    let branches = (0..n)
        .map(|_| {
            let ram = random_ram(rng);
            let mut addrs: BTreeSet<Address> = ctx.iter().filter(|_| !rng.gen_bool(0.05)).cloned().collect();
            addrs.extend(xi.star(&ram));
            (ram, random_positive(rng, &addrs, depth - 1))
        })
        .collect();
    Design::negative(base, branches)
}

/// The shape the enumerator produces: bounded depth, ramifications from the
/// pool, negative branches keeping their whole context.
fn within(d: &Design, bounds: &UniverseBounds) -> bool {
    let shape_ok = match &d.body {
        Body::Positive { children, .. } => bounds.pool.contains(&children.keys().copied().collect()),
        Body::Negative { branches } => branches.iter().all(|(ram, b)| {
            let mut full: BTreeSet<Address> = d.base.positive.clone();
            full.extend(d.base.negative.iter().flat_map(|n| n.star(ram)));
            bounds.pool.contains(ram) && b.base.positive == full
        }),
        _ => true,
    };
    shape_ok && d.depth() <= bounds.max_depth && d.premises().into_iter().all(|p| within(p, bounds))
}

/// Random designs, some invalid and some out of bounds, are enumerated
/// exactly when they validate and fit the bounds.
pub fn generator_agreement(samples: usize, seed: u64) -> Check {
    let bounds = UniverseBounds::powerset(3, 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = [0usize; 3];
    for (base, universe) in [
        (Pitchfork::positive([xi()]), enumerate_universe(&Pitchfork::positive([xi()]), &bounds)),
        (Pitchfork::negative(xi(), []), enumerate_universe(&Pitchfork::negative(xi(), []), &bounds)),
    ] {
        let universe = universe.map_err(err)?;
        for d in &universe {
            d.validate().map_err(|e| format!("enumerated design is invalid: {e}"))?;
            ensure!(within(d, &bounds), "enumerated design out of bounds: {d:?}");
        }
        let members: HashSet<&Design> = universe.iter().collect();
        ensure!(members.len() == universe.len(), "duplicates in the universe");
        for _ in 0..samples {
            let depth = rng.gen_range(1..=4);
            let d = if base.negative.is_some() {
                random_negative(&mut rng, &xi(), &BTreeSet::new(), depth)
            } else {
                random_positive(&mut rng, &base.positive, depth)
            };
            let valid = d.validate().is_ok();
            let fits = valid && within(&d, &bounds);
            ensure!(fits == members.contains(&d), "valid {valid}, fits {fits}, enumerated {}: {d:?}", !fits);
            seen[usize::from(valid) + usize::from(fits)] += 1;
        }
    }
    Ok(format!("{} invalid, {} valid out of bounds, {} enumerated", seen[0], seen[1], seen[2]))
}

/// Proper rules on the longest branch: each is a move the copycat relays.
fn rule_depth(d: &Design) -> usize {
    let below = d.premises().iter().map(|p| rule_depth(p)).max().unwrap_or(0);
    below + usize::from(!d.is_daimon() && !d.is_fid())
}

/// Deeper copycats extend shallower ones, and every Ω-free positive design
/// of the bounded universe goes through a deep enough one unchanged.
pub fn fax_coherence() -> Check {
    let (x, y) = (Address::new(&[0]), Address::new(&[1]));
    let bounds = UniverseBounds::powerset(3, 1);
    for depth in 0..4 {
        let deeper = fax_over(&x, &y, depth + 1, &bounds.pool);
        ensure!(
            prune_positive_levels(&deeper, depth) == fax_over(&x, &y, depth, &bounds.pool),
            "depth {} does not extend depth {depth}",
            depth + 1
        );
    }
    let mut runs = 0;
    for d in enumerate_universe(&Pitchfork::positive([x.clone()]), &bounds).map_err(err)? {
        if d.contains_fid() {
            continue;
        }
        let need = rule_depth(&d);
        for depth in need..need + 2 {
            let r = normalize_designs(&[&d, &fax_over(&x, &y, depth, &bounds.pool)], DEFAULT_FUEL);
            ensure!(r.outcome == InteractionOutcome::Converged(d.relocate(&x, &y)), "{d:?} at depth {depth}");
            runs += 1;
        }
    }
    Ok(format!("prefixes up to depth 4, {runs} copies"))
}
