//! Random well-typed propositional terms and a nameless form for comparing
//! terms up to renaming of bound variables.

use grounds::background::Formula;
use grounds::ground::{GroundTerm, Side, TypedVar};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn a() -> Formula {
    Formula::prop("A")
}

pub fn b() -> Formula {
    Formula::prop("B")
}

pub fn random_type<R: Rng>(rng: &mut R, depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.4) {
        return if rng.gen_bool(0.5) { a() } else { b() };
    }
    let (l, r) = (random_type(rng, depth - 1), random_type(rng, depth - 1));
    match rng.gen_range(0..3) {
        0 => Formula::implies(l, r),
        1 => Formula::conj(l, r),
        _ => Formula::disj(l, r),
    }
}

fn random_var<R: Rng>(rng: &mut R, ty: Formula) -> TypedVar {
    let name = ["x", "y", "z"].choose(rng).unwrap();
    let index = if rng.gen_bool(0.7) { None } else { Some(1) };
    TypedVar::new(name, index, ty)
}

/// A term of type `ty`, rich in redexes, reusing variable names so that
/// binders shadow each other.
pub fn random_term<R: Rng>(rng: &mut R, ty: &Formula, ctx: &[TypedVar], size: usize) -> GroundTerm {
    let in_scope: Vec<&TypedVar> = ctx.iter().filter(|v| &v.ty == ty).collect();
    if size == 0 {
        return match in_scope.choose(rng) {
            Some(v) => GroundTerm::var(v),
            None => GroundTerm::var(&random_var(rng, ty.clone())),
        };
    }
    let under = |v: &TypedVar| -> Vec<TypedVar> {
        let mut c = ctx.to_vec();
        c.push(v.clone());
        c
    };
    match rng.gen_range(0..8) {
        0 if !in_scope.is_empty() => GroundTerm::var(in_scope.choose(rng).unwrap()),
        0 | 1 => match ty {
            Formula::Impl(l, r) => {
                let v = random_var(rng, l.as_ref().clone());
                GroundTerm::impl_i(&v, random_term(rng, r, &under(&v), size - 1))
            }
            Formula::Conj(l, r) => {
                GroundTerm::conj_i(random_term(rng, l, ctx, size / 2), random_term(rng, r, ctx, size / 2))
            }
            Formula::Disj(l, r) => {
                let side = if rng.gen_bool(0.5) { Side::Left } else { Side::Right };
                let inner = side.pick(l, r);
                GroundTerm::disj_i(side, ty.clone(), random_term(rng, inner, ctx, size - 1))
            }
            _ => random_term(rng, ty, ctx, 0),
        },
        2 | 3 => {
            let c = random_type(rng, 1);
            let v = random_var(rng, c.clone());
            let fun = GroundTerm::impl_i(&v, random_term(rng, ty, &under(&v), size / 2));
            GroundTerm::impl_e(fun, random_term(rng, &c, ctx, size / 2))
        }
        4 => {
            let c = random_type(rng, 1);
            let (side, pair) = if rng.gen_bool(0.5) {
                (Side::Left, GroundTerm::conj_i(random_term(rng, ty, ctx, size / 2), random_term(rng, &c, ctx, size / 2)))
            } else {
                (Side::Right, GroundTerm::conj_i(random_term(rng, &c, ctx, size / 2), random_term(rng, ty, ctx, size / 2)))
            };
            GroundTerm::conj_e(side, pair)
        }
        5 | 6 => {
            let (c, d) = (random_type(rng, 1), random_type(rng, 1));
            let disj = Formula::disj(c.clone(), d.clone());
            let scrutinee = random_term(rng, &disj, ctx, size / 3);
            let (l, r) = (random_var(rng, c), random_var(rng, d));
            let lc = random_term(rng, ty, &under(&l), size / 3);
            let rc = random_term(rng, ty, &under(&r), size / 3);
            GroundTerm::disj_e(&l, &r, scrutinee, lc, rc)
        }
        _ => {
            let c = random_type(rng, 1);
            let f = random_var(rng, Formula::implies(c.clone(), ty.clone()));
            GroundTerm::impl_e(GroundTerm::var(&f), random_term(rng, &c, ctx, size - 1))
        }
    }
}

/// Bound variables as distances to their binder, free ones by name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nameless {
    Bound(usize),
    Free(TypedVar),
    Node(String, Vec<Nameless>),
}

pub fn nameless(t: &GroundTerm) -> Nameless {
    go(t, &mut Vec::new())
}

fn go(t: &GroundTerm, env: &mut Vec<TypedVar>) -> Nameless {
    let under = |t: &GroundTerm, v: &TypedVar, env: &mut Vec<TypedVar>| {
        env.push(v.clone());
        let n = go(t, env);
        env.pop();
        n
    };
    match t {
        GroundTerm::Var(v) => match env.iter().rev().position(|w| w == v) {
            Some(k) => Nameless::Bound(k),
            None => Nameless::Free(v.clone()),
        },
        GroundTerm::ImplI(v, body) => Nameless::Node(format!("λ{}", v.ty), vec![under(body, v, env)]),
        GroundTerm::DisjE { left, right, scrutinee, left_case, right_case } => Nameless::Node(
            format!("case {} {}", left.ty, right.ty),
            vec![go(scrutinee, env), under(left_case, left, env), under(right_case, right, env)],
        ),
        GroundTerm::ImplE(f, u) => Nameless::Node("app".into(), vec![go(f, env), go(u, env)]),
        GroundTerm::ConjI(l, r) => Nameless::Node("pair".into(), vec![go(l, env), go(r, env)]),
        GroundTerm::ConjE(side, body) => Nameless::Node(format!("proj {side:?}"), vec![go(body, env)]),
        GroundTerm::DisjI { side, ty, body } => Nameless::Node(format!("inj {side:?} {ty}"), vec![go(body, env)]),
        GroundTerm::Explode(ty, body) => Nameless::Node(format!("explode {ty}"), vec![go(body, env)]),
        GroundTerm::Const(c, ty) => Nameless::Node(format!("const {c} {ty}"), Vec::new()),
        other => panic!("outside the propositional fragment: {other:?}"),
    }
}

/// Replaces the free occurrences of `x`; `u` has no dangling indices so
/// nothing needs shifting.
pub fn nameless_subst(t: &Nameless, x: &TypedVar, u: &Nameless) -> Nameless {
    match t {
        Nameless::Free(v) if v == x => u.clone(),
        Nameless::Bound(_) | Nameless::Free(_) => t.clone(),
        Nameless::Node(tag, kids) => Nameless::Node(tag.clone(), kids.iter().map(|k| nameless_subst(k, x, u)).collect()),
    }
}
