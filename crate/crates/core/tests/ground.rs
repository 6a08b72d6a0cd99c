mod common;

use std::time::Instant;

use common::terms::{a, b, nameless, nameless_subst, random_term, random_type};
use common::read_sample;
use grounds::background::Formula;
use grounds::ground::text::parse_ground_file;
use grounds::ground::{
    close_instance, denotes_ground, normalize, reduce_step, typecheck, Assignment, GroundTerm, GroundhoodConfig,
    Language, Outcome, Verdict, DEFAULT_FUEL,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn aa() -> Formula {
    Formula::implies(a(), a())
}

fn identity() -> GroundTerm {
    let x = grounds::ground::TypedVar::new("ξ", None, a());
    GroundTerm::impl_i(&x, GroundTerm::var(&x))
}

#[test]
fn worked_term_reduces_to_identity_in_two_steps() {
    let file = parse_ground_file(&read_sample("worked.gt")).unwrap();
    let t = &file.terms[0];
    let start = Instant::now();
    let r = normalize(t, &file.language, DEFAULT_FUEL);
    let elapsed = start.elapsed();
    assert_eq!(r.outcome, Outcome::Canonical(identity()));
    let names: Vec<&str> = r.trace.iter().map(|s| s.equation.as_str()).collect();
    assert_eq!(names, ["→E", "∨E"]);
    assert!(elapsed.as_millis() < 10, "took {elapsed:?}");
    assert_eq!(typecheck(t, &file.language).unwrap().to_string(), "⊢ A → A");
    assert_eq!(denotes_ground(t, &file.language, GroundhoodConfig::default()), Verdict::Yes);
}

#[test]
fn open_variant_is_a_function_of_its_argument() {
    let file = parse_ground_file(&read_sample("worked-open.gt")).unwrap();
    let ty = typecheck(&file.terms[0], &file.language).unwrap();
    assert_eq!(ty.antecedents(), vec![aa()]);
    assert_eq!(ty.succedent, aa());
    assert_eq!(ty.to_string(), "A → A ⊢ A → A");
}

#[test]
fn disjunctive_syllogism_conversions() {
    let file = parse_ground_file(&read_sample("ds.gt")).unwrap();
    let lang = &file.language;
    let x = grounds::ground::TypedVar::new("x", None, a());
    let y = grounds::ground::TypedVar::new("y", None, b());
    let r = grounds::ground::TypedVar::new("r", None, Formula::not(a()));

    let (first, step) = reduce_step(&file.terms[0], lang).unwrap();
    assert_eq!(step.equation, "DS₁");
    assert_eq!(first, GroundTerm::explode(b(), GroundTerm::impl_e(GroundTerm::var(&r), GroundTerm::var(&x))));

    let (second, step) = reduce_step(&file.terms[1], lang).unwrap();
    assert_eq!(step.equation, "DS₂");
    assert_eq!(second, GroundTerm::var(&y));

    assert!(reduce_step(&file.terms[2], lang).is_none());
    assert!(matches!(normalize(&file.terms[2], lang, DEFAULT_FUEL).outcome, Outcome::Stuck(_)));
    for t in &file.terms {
        assert_eq!(typecheck(t, lang).unwrap().succedent, b());
    }
}

#[test]
fn ping_pong_is_caught_as_a_loop() {
    let file = parse_ground_file(&read_sample("pingpong.gt")).unwrap();
    let r = normalize(&file.terms[0], &file.language, DEFAULT_FUEL);
    let Outcome::Loop(cycle) = &r.outcome else { panic!("{:?}", r.outcome) };
    assert!(r.trace.len() <= 4, "{} steps", r.trace.len());
    assert_eq!(cycle.first(), cycle.last());
    assert!(matches!(denotes_ground(&file.terms[0], &file.language, GroundhoodConfig::default()), Verdict::No(_)));
}

#[test]
fn subject_reduction_on_random_terms() {
    let lang = Language::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut steps = 0;
    for n in 0..1000 {
        let ty = random_type(&mut rng, 2);
        let size = rng.gen_range(1..12);
        let t = random_term(&mut rng, &ty, &[], size);
        let start = typecheck(&t, &lang).unwrap_or_else(|e| panic!("term {n} `{t}`: {e}"));
        assert!(start.succedent.alpha_eq(&ty));
        let free = t.free_vars();
        let mut cur = t.clone();
        for _ in 0..40 {
            let Some((next, step)) = reduce_step(&cur, &lang) else { break };
            let after = typecheck(&next, &lang)
                .unwrap_or_else(|e| panic!("term {n}: `{cur}` --{}--> `{next}`: {e}", step.equation));
            assert!(after.succedent.alpha_eq(&ty), "term {n}: type changed to {}", after.succedent);
            assert!(next.free_vars().is_subset(&free), "term {n}: new free variables");
            cur = next;
            steps += 1;
        }
    }
    assert!(steps > 1000, "only {steps} steps taken");
}

#[test]
fn substitution_agrees_with_nameless_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..500 {
        let ty = random_type(&mut rng, 2);
        let size = rng.gen_range(1..10);
        let t = random_term(&mut rng, &ty, &[], size);
        let Some(x) = t.free_vars().into_iter().next() else { continue };
        let size = rng.gen_range(0..5);
        let u = random_term(&mut rng, &x.ty, &[], size);
        let ours = nameless(&t.subst_var(&x, &u));
        let oracle = nameless_subst(&nameless(&t), &x, &nameless(&u));
        assert_eq!(ours, oracle, "`{t}` [{x} := `{u}`]");
    }
}

#[test]
fn close_instance_agrees_with_nameless_oracle() {
    let lang = Language::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 300 {
        let ty = random_type(&mut rng, 2);
        let size = rng.gen_range(1..10);
        let t = random_term(&mut rng, &ty, &[], size);
        let mut asg = Assignment::default();
        let mut closing = Vec::new();
        for v in t.free_vars() {
            // closed terms of the variable's type, built from binders only
            let u = random_term(&mut rng, &v.ty, &[], 3);
            if !u.free_vars().is_empty() {
                break;
            }
            asg.terms.insert(v.clone(), u.clone());
            closing.push((v, u));
        }
        if asg.terms.len() != t.free_vars().len() {
            continue;
        }
        let ours = close_instance(&t, &asg, &lang).unwrap();
        assert!(ours.free_vars().is_empty());
        let oracle = closing.iter().fold(nameless(&t), |acc, (v, u)| nameless_subst(&acc, v, &nameless(u)));
        assert_eq!(nameless(&ours), oracle);
        checked += 1;
    }
}

#[test]
fn missing_closing_terms_are_reported() {
    let file = parse_ground_file(&read_sample("worked-open.gt")).unwrap();
    assert!(close_instance(&file.terms[0], &Assignment::default(), &file.language).is_err());
}

/// Rewriting systems `f_i(X) = f_j(X)`: a loop is reported exactly when the
/// successor chain from the start revisits an operation.
#[test]
fn loops_are_sound_and_complete_on_unary_systems() {
    use grounds::ground::text::parse_term;
    use grounds::sexp::parse_one;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let n = rng.gen_range(1..6);
        let next: Vec<Option<usize>> = (0..n).map(|_| rng.gen_bool(0.8).then(|| rng.gen_range(0..n))).collect();
        let mut lang = Language::default();
        for i in 0..n {
            lang.add_op(&format!("f{i}"), vec![a()], a()).unwrap();
        }
        for (i, j) in next.iter().enumerate() {
            if let Some(j) = j {
                let lhs = parse_term(&parse_one(&format!("(app f{i} (meta X))")).unwrap()).unwrap();
                let rhs = parse_term(&parse_one(&format!("(app f{j} (meta X))")).unwrap()).unwrap();
                lang.add_equation(&format!("e{i}"), lhs, rhs).unwrap();
            }
        }
        let start = rng.gen_range(0..n);
        let t = parse_term(&parse_one(&format!("(app f{start} (var x (atom A)))")).unwrap()).unwrap();

        let mut seen = vec![start];
        let mut cur = start;
        let expected_loop = loop {
            match next[cur] {
                None => break false,
                Some(j) if seen.contains(&j) => break true,
                Some(j) => {
                    seen.push(j);
                    cur = j;
                }
            }
        };
        let r = normalize(&t, &lang, DEFAULT_FUEL);
        match &r.outcome {
            Outcome::Loop(cycle) => {
                assert!(expected_loop);
                assert_eq!(r.trace.len(), seen.len());
                assert_eq!(cycle.first(), cycle.last());
                for w in cycle.windows(2) {
                    assert_eq!(reduce_step(&w[0], &lang).unwrap().0, w[1]);
                }
            }
            Outcome::Stuck(_) => assert!(!expected_loop),
            other => panic!("{other:?}"),
        }
    }
}
