mod common;

use grounds::background::Formula;
use grounds::behaviour::{enumerate_universe, one, zero, CandidateVerdict, PseudoReason, UniverseBounds};
use grounds::ground::{GroundTerm, TypedVar};
use grounds::interaction::{normalize_designs, InteractionOutcome, DEFAULT_FUEL};
use grounds::ludics::named::{atomic_bomb, daimon_at, fax_over};
use grounds::ludics::{Address, Pitchfork};
use grounds::translation::{arrow, check_translation, translate, Site, TranslationEnv, TranslationError};

fn root() -> Address {
    Address::root()
}

fn env(depth: usize) -> TranslationEnv {
    let bounds = UniverseBounds::powerset(depth, 1);
    let mut env = TranslationEnv::new(bounds.clone());
    env.atoms.insert("0".into(), zero(&root(), bounds.clone()).unwrap());
    env.atoms.insert("1".into(), one(&root(), bounds).unwrap());
    env
}

fn identity(ty: Formula) -> GroundTerm {
    let x = TypedVar::new("ξ", None, ty);
    GroundTerm::impl_i(&x, GroundTerm::var(&x))
}

fn unit() -> Formula {
    Formula::prop("1")
}

#[test]
fn fax_passes_daimon_along() {
    let (x, y) = (Address::new(&[0]), Address::new(&[1]));
    let pool = UniverseBounds::powerset(3, 1).pool;
    for depth in 0..4 {
        let r = normalize_designs(&[&daimon_at(&x), &fax_over(&x, &y, depth, &pool)], DEFAULT_FUEL);
        assert_eq!(r.outcome, InteractionOutcome::Converged(daimon_at(&y)), "depth {depth}");
    }
}

#[test]
fn identity_on_absurdity_translates_to_fax() {
    let mut env = env(2);
    let tr = translate(&identity(Formula::Absurd), &mut env).unwrap();
    let Site::Arrow(a, b) = &tr.site else { panic!("{:?}", tr.site) };
    assert_eq!(tr.design, fax_over(a, b, env.fax_depth, &env.bounds.pool));
    assert_eq!(tr.design.base, Pitchfork::negative(a.clone(), [b.clone()]));
}

/// `|0|_F` is empty, so every design on `α ⊢ β` sends it into `|0|_F`: the
/// defining set of `0 → 0` is the whole bounded universe and its only
/// counter-design is `†` on `⊢ α` against `0 ⊢ β`-style skunks. Against that
/// orthogonal the copycat uses only its root, so it is not material.
#[test]
fn fax_in_absurd_to_absurd_is_not_material() {
    let mut env = env(2);
    let t = identity(Formula::Absurd);
    let tr = translate(&t, &mut env).unwrap();
    let Site::Arrow(a, b) = &tr.site else { panic!() };
    let (dom, cod) = (env.atom_at(&Formula::Absurd, a).unwrap(), env.atom_at(&Formula::Absurd, b).unwrap());
    assert!(dom.free_incarnation().is_empty());
    let arr = arrow(&dom, &cod, &env.bounds).unwrap();
    let universe = enumerate_universe(&tr.site.base(), &env.bounds).unwrap();
    assert_eq!(arr.defining, universe);
    assert!(arr.behaviour.orthogonal.iter().all(|f| f[0].is_daimon()));
    assert_eq!(
        check_translation(&t, &tr.design, &env).unwrap(),
        CandidateVerdict::PseudoGround(PseudoReason::NotMaterial)
    );
    let inc = arr.behaviour.incarnation(&tr.design).unwrap();
    assert!(inc.premises().is_empty());
}

#[test]
fn named_verdicts_in_one_and_zero() {
    let bounds = UniverseBounds::powerset(3, 1);
    let xi = Address::new(&[0]);
    let one = one(&xi, bounds.clone()).unwrap();
    let zero = zero(&xi, bounds).unwrap();
    assert_eq!(one.classify(&atomic_bomb(&xi)), CandidateVerdict::Ground);
    assert_eq!(one.classify(&daimon_at(&xi)), CandidateVerdict::PseudoGround(PseudoReason::ContainsDaimon));
    assert_eq!(zero.classify(&daimon_at(&xi)), CandidateVerdict::PseudoGround(PseudoReason::ContainsDaimon));
    assert_eq!(zero.classify(&atomic_bomb(&xi)), CandidateVerdict::NotInBehaviour);
    assert_eq!(zero.members, vec![daimon_at(&xi)]);
}

/// Applying the identity of `1` to any member of `1` gives that member back.
#[test]
fn identity_law_on_one() {
    let mut env = env(2);
    let members = env.atoms["1"].members.clone();
    assert_eq!(members.len(), 2);
    for (k, m) in members.iter().enumerate() {
        let name = format!("c{k}");
        env.constants.insert(name.clone(), m.clone());
        let t = GroundTerm::impl_e(identity(unit()), GroundTerm::constant(&name, unit()));
        let tr = translate(&t, &mut env).unwrap();
        let Site::Atom(out) = &tr.site else { panic!() };
        assert_eq!(tr.design, m.relocate(&root(), out));
        let expected = if m.is_daimon() {
            CandidateVerdict::PseudoGround(PseudoReason::ContainsDaimon)
        } else {
            CandidateVerdict::Ground
        };
        assert_eq!(check_translation(&t, &tr.design, &env).unwrap(), expected);
    }
}

/// Every positive design of the bounded universe goes through a deep enough
/// copycat unchanged, and deeper copycats agree with shallower ones.
#[test]
fn fax_is_coherent_across_depths() {
    common::checks::fax_coherence().unwrap();
}

#[test]
fn only_closed_linear_terms_translate() {
    let x = TypedVar::new("x", None, Formula::Absurd);
    let y = TypedVar::new("y", None, Formula::Absurd);
    let k = GroundTerm::impl_i(&x, GroundTerm::impl_i(&y, GroundTerm::var(&x)));
    assert_eq!(translate(&k, &mut env(2)), Err(TranslationError::NonLinear));
    assert_eq!(translate(&GroundTerm::var(&x), &mut env(2)), Err(TranslationError::Open));
    let pair = GroundTerm::conj_i(GroundTerm::constant("c", unit()), GroundTerm::constant("c", unit()));
    assert!(matches!(translate(&pair, &mut env(2)), Err(TranslationError::Unsupported(_))));
}
