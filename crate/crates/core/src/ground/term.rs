use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::background::{fresh_name, Formula, IndTerm};

/// A typed variable `ξ_i^A`. Two occurrences denote the same variable only
/// when name, index and type all agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypedVar {
    pub name: String,
    pub index: Option<u32>,
    pub ty: Formula,
}

impl TypedVar {
    pub fn new(name: &str, index: Option<u32>, ty: Formula) -> Self {
        TypedVar { name: name.to_owned(), index, ty }
    }

    fn with_type(&self, ty: Formula) -> Self {
        TypedVar { ty, ..self.clone() }
    }
}

impl fmt::Display for TypedVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        if let Some(i) = self.index {
            for d in i.to_string().chars() {
                let sub = char::from_u32('₀' as u32 + d.to_digit(10).unwrap()).unwrap();
                write!(f, "{sub}")?;
            }
        }
        if self.ty.is_atomic() || self.ty == Formula::Absurd {
            write!(f, "^{}", self.ty)
        } else {
            write!(f, "^({})", self.ty)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn number(self) -> u32 {
        match self {
            Side::Left => 1,
            Side::Right => 2,
        }
    }

    pub fn from_number(n: u32) -> Option<Side> {
        match n {
            1 => Some(Side::Left),
            2 => Some(Side::Right),
            _ => None,
        }
    }

    pub fn pick<T>(self, left: T, right: T) -> T {
        match self {
            Side::Left => left,
            Side::Right => right,
        }
    }
}

/// Terms of the languages of grounds: the primitive operations of `C`,
/// the eliminations of `C*`, disjunctive syllogism and user operations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroundTerm {
    Var(TypedVar),
    /// `c^A`, naming an atomic derivation of `A`.
    Const(String, Formula),
    ConjI(Box<GroundTerm>, Box<GroundTerm>),
    /// `∨I[A_i ⊢ A_1 ∨ A_2](T)`; `ty` is the full disjunction.
    DisjI { side: Side, ty: Formula, body: Box<GroundTerm> },
    ImplI(TypedVar, Box<GroundTerm>),
    ForallI(String, Box<GroundTerm>),
    /// `∃I[A(t) ⊢ ∃x A(x)](T)`; `ty` is the existential formula.
    ExistsI { witness: IndTerm, ty: Formula, body: Box<GroundTerm> },
    /// `0_A(T)`.
    Explode(Formula, Box<GroundTerm>),
    ConjE(Side, Box<GroundTerm>),
    DisjE {
        left: TypedVar,
        right: TypedVar,
        scrutinee: Box<GroundTerm>,
        left_case: Box<GroundTerm>,
        right_case: Box<GroundTerm>,
    },
    ImplE(Box<GroundTerm>, Box<GroundTerm>),
    ForallE(IndTerm, Box<GroundTerm>),
    ExistsE { ind: String, var: TypedVar, scrutinee: Box<GroundTerm>, body: Box<GroundTerm> },
    Ds(Box<GroundTerm>, Box<GroundTerm>),
    Op(String, Vec<GroundTerm>),
    /// Pattern metavariable; only meaningful inside equations.
    Meta(String),
}

use GroundTerm as T;

impl GroundTerm {
    pub fn var(v: &TypedVar) -> Self {
        T::Var(v.clone())
    }

    pub fn constant(name: &str, ty: Formula) -> Self {
        T::Const(name.to_owned(), ty)
    }

    pub fn conj_i(a: GroundTerm, b: GroundTerm) -> Self {
        T::ConjI(Box::new(a), Box::new(b))
    }

    pub fn disj_i(side: Side, ty: Formula, body: GroundTerm) -> Self {
        T::DisjI { side, ty, body: Box::new(body) }
    }

    pub fn impl_i(v: &TypedVar, body: GroundTerm) -> Self {
        T::ImplI(v.clone(), Box::new(body))
    }

    pub fn forall_i(x: &str, body: GroundTerm) -> Self {
        T::ForallI(x.to_owned(), Box::new(body))
    }

    pub fn exists_i(witness: IndTerm, ty: Formula, body: GroundTerm) -> Self {
        T::ExistsI { witness, ty, body: Box::new(body) }
    }

    pub fn explode(target: Formula, body: GroundTerm) -> Self {
        T::Explode(target, Box::new(body))
    }

    pub fn conj_e(side: Side, body: GroundTerm) -> Self {
        T::ConjE(side, Box::new(body))
    }

    pub fn disj_e(left: &TypedVar, right: &TypedVar, scrutinee: GroundTerm, l: GroundTerm, r: GroundTerm) -> Self {
        T::DisjE {
            left: left.clone(),
            right: right.clone(),
            scrutinee: Box::new(scrutinee),
            left_case: Box::new(l),
            right_case: Box::new(r),
        }
    }

    pub fn impl_e(fun: GroundTerm, arg: GroundTerm) -> Self {
        T::ImplE(Box::new(fun), Box::new(arg))
    }

    pub fn forall_e(t: IndTerm, body: GroundTerm) -> Self {
        T::ForallE(t, Box::new(body))
    }

    pub fn exists_e(ind: &str, var: &TypedVar, scrutinee: GroundTerm, body: GroundTerm) -> Self {
        T::ExistsE { ind: ind.to_owned(), var: var.clone(), scrutinee: Box::new(scrutinee), body: Box::new(body) }
    }

    pub fn ds(disj: GroundTerm, refutation: GroundTerm) -> Self {
        T::Ds(Box::new(disj), Box::new(refutation))
    }

    pub fn op(name: &str, args: Vec<GroundTerm>) -> Self {
        T::Op(name.to_owned(), args)
    }

    /// Whether the outermost symbol is an operation of `C` (or a variable,
    /// for open terms).
    pub fn has_primitive_head(&self) -> bool {
        matches!(
            self,
            T::Var(_)
                | T::Const(..)
                | T::ConjI(..)
                | T::DisjI { .. }
                | T::ImplI(..)
                | T::ForallI(..)
                | T::ExistsI { .. }
                | T::Explode(..)
        )
    }

    pub fn head_symbol(&self) -> &str {
        match self {
            T::Var(_) => "var",
            T::Const(..) => "const",
            T::ConjI(..) => "∧I",
            T::DisjI { .. } => "∨I",
            T::ImplI(..) => "→I",
            T::ForallI(..) => "∀I",
            T::ExistsI { .. } => "∃I",
            T::Explode(..) => "0",
            T::ConjE(..) => "∧E",
            T::DisjE { .. } => "∨E",
            T::ImplE(..) => "→E",
            T::ForallE(..) => "∀E",
            T::ExistsE { .. } => "∃E",
            T::Ds(..) => "DS",
            T::Op(name, _) => name,
            T::Meta(_) => "meta",
        }
    }

    /// Immediate subterms, left to right.
    pub fn children(&self) -> Vec<&GroundTerm> {
        match self {
            T::Var(_) | T::Const(..) | T::Meta(_) => vec![],
            T::ConjI(a, b) | T::ImplE(a, b) | T::Ds(a, b) => vec![a, b],
            T::DisjI { body, .. }
            | T::ImplI(_, body)
            | T::ForallI(_, body)
            | T::ExistsI { body, .. }
            | T::Explode(_, body)
            | T::ConjE(_, body)
            | T::ForallE(_, body) => vec![body],
            T::DisjE { scrutinee, left_case, right_case, .. } => vec![scrutinee, left_case, right_case],
            T::ExistsE { scrutinee, body, .. } => vec![scrutinee, body],
            T::Op(_, args) => args.iter().collect(),
        }
    }

    pub fn children_mut(&mut self) -> Vec<&mut GroundTerm> {
        match self {
            T::Var(_) | T::Const(..) | T::Meta(_) => vec![],
            T::ConjI(a, b) | T::ImplE(a, b) | T::Ds(a, b) => vec![a, b],
            T::DisjI { body, .. }
            | T::ImplI(_, body)
            | T::ForallI(_, body)
            | T::ExistsI { body, .. }
            | T::Explode(_, body)
            | T::ConjE(_, body)
            | T::ForallE(_, body) => vec![body],
            T::DisjE { scrutinee, left_case, right_case, .. } => vec![scrutinee, left_case, right_case],
            T::ExistsE { scrutinee, body, .. } => vec![scrutinee, body],
            T::Op(_, args) => args.iter_mut().collect(),
        }
    }

    pub fn at_path(&self, path: &[usize]) -> Option<&GroundTerm> {
        match path.split_first() {
            None => Some(self),
            Some((&i, rest)) => self.children().get(i).and_then(|c| c.at_path(rest)),
        }
    }

    pub fn at_path_mut(&mut self, path: &[usize]) -> Option<&mut GroundTerm> {
        match path.split_first() {
            None => Some(self),
            Some((&i, rest)) => self.children_mut().into_iter().nth(i).and_then(|c| c.at_path_mut(rest)),
        }
    }

    /// Same constructor with equal non-term fields (binders, annotations).
    pub fn same_shape(&self, other: &GroundTerm) -> bool {
        match (self, other) {
            (T::Var(a), T::Var(b)) => a == b,
            (T::Const(a, f), T::Const(b, g)) => a == b && f == g,
            (T::Meta(a), T::Meta(b)) => a == b,
            (T::ConjI(..), T::ConjI(..)) | (T::ImplE(..), T::ImplE(..)) | (T::Ds(..), T::Ds(..)) => true,
            (T::DisjI { side: s, ty: f, .. }, T::DisjI { side: t, ty: g, .. }) => s == t && f == g,
            (T::ImplI(u, _), T::ImplI(v, _)) => u == v,
            (T::ForallI(x, _), T::ForallI(y, _)) => x == y,
            (T::ExistsI { witness: s, ty: f, .. }, T::ExistsI { witness: t, ty: g, .. }) => s == t && f == g,
            (T::Explode(f, _), T::Explode(g, _)) => f == g,
            (T::ConjE(s, _), T::ConjE(t, _)) => s == t,
            (T::DisjE { left: a, right: b, .. }, T::DisjE { left: c, right: d, .. }) => a == c && b == d,
            (T::ForallE(s, _), T::ForallE(t, _)) => s == t,
            (T::ExistsE { ind: x, var: u, .. }, T::ExistsE { ind: y, var: v, .. }) => x == y && u == v,
            (T::Op(f, xs), T::Op(g, ys)) => f == g && xs.len() == ys.len(),
            _ => false,
        }
    }

    pub fn size(&self) -> usize {
        1 + self.children().iter().map(|c| c.size()).sum::<usize>()
    }

    /// Free typed variables.
    pub fn free_vars(&self) -> BTreeSet<TypedVar> {
        let mut out = BTreeSet::new();
        self.collect_free_vars(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free_vars(&self, bound: &mut Vec<TypedVar>, out: &mut BTreeSet<TypedVar>) {
        let under = |t: &GroundTerm, vs: &[&TypedVar], bound: &mut Vec<TypedVar>, out: &mut BTreeSet<TypedVar>| {
            let n = bound.len();
            bound.extend(vs.iter().map(|v| (*v).clone()));
            t.collect_free_vars(bound, out);
            bound.truncate(n);
        };
        match self {
            T::Var(v) => {
                if !bound.contains(v) {
                    out.insert(v.clone());
                }
            }
            T::ImplI(v, body) => under(body, &[v], bound, out),
            T::DisjE { left, right, scrutinee, left_case, right_case } => {
                scrutinee.collect_free_vars(bound, out);
                under(left_case, &[left], bound, out);
                under(right_case, &[right], bound, out);
            }
            T::ExistsE { var, scrutinee, body, .. } => {
                scrutinee.collect_free_vars(bound, out);
                under(body, &[var], bound, out);
            }
            _ => {
                for c in self.children() {
                    c.collect_free_vars(bound, out);
                }
            }
        }
    }

    /// Free individual variables, including those in type annotations.
    pub fn free_ind_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free_ind(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free_ind(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        let formula = |f: &Formula, bound: &[String], out: &mut BTreeSet<String>| {
            out.extend(f.free_vars().into_iter().filter(|x| !bound.contains(x)));
        };
        let ind = |t: &IndTerm, bound: &[String], out: &mut BTreeSet<String>| {
            if let IndTerm::Var(x) = t {
                if !bound.contains(x) {
                    out.insert(x.clone());
                }
            }
        };
        match self {
            T::Var(v) => formula(&v.ty, bound, out),
            T::Const(_, f) | T::DisjI { ty: f, .. } | T::Explode(f, _) => formula(f, bound, out),
            T::ImplI(v, _) => formula(&v.ty, bound, out),
            T::ExistsI { witness, ty, .. } => {
                ind(witness, bound, out);
                formula(ty, bound, out);
            }
            T::ForallE(t, _) => ind(t, bound, out),
            T::DisjE { left, right, .. } => {
                formula(&left.ty, bound, out);
                formula(&right.ty, bound, out);
            }
            _ => {}
        }
        match self {
            T::ForallI(x, body) => {
                bound.push(x.clone());
                body.collect_free_ind(bound, out);
                bound.pop();
            }
            T::ExistsE { ind: x, var, scrutinee, body } => {
                scrutinee.collect_free_ind(bound, out);
                bound.push(x.clone());
                formula(&var.ty, bound, out);
                body.collect_free_ind(bound, out);
                bound.pop();
            }
            _ => {
                for c in self.children() {
                    c.collect_free_ind(bound, out);
                }
            }
        }
    }

    pub fn is_closed(&self) -> bool {
        self.free_vars().is_empty() && self.free_ind_vars().is_empty()
    }

    fn collect_names(&self, typed: &mut BTreeSet<(String, Option<u32>)>, inds: &mut BTreeSet<String>) {
        let mut note = |v: &TypedVar, inds: &mut BTreeSet<String>| {
            typed.insert((v.name.clone(), v.index));
            v.ty.all_vars(inds);
        };
        match self {
            T::Var(v) | T::ImplI(v, _) => note(v, inds),
            T::DisjE { left, right, .. } => {
                note(left, inds);
                note(right, inds);
            }
            T::ExistsE { ind, var, .. } => {
                inds.insert(ind.clone());
                note(var, inds);
            }
            T::ForallI(x, _) => {
                inds.insert(x.clone());
            }
            T::Const(_, f) | T::DisjI { ty: f, .. } | T::Explode(f, _) => f.all_vars(inds),
            T::ExistsI { witness, ty, .. } => {
                ty.all_vars(inds);
                if let IndTerm::Var(x) = witness {
                    inds.insert(x.clone());
                }
            }
            T::ForallE(IndTerm::Var(x), _) => {
                inds.insert(x.clone());
            }
            _ => {}
        }
        for c in self.children() {
            c.collect_names(typed, inds);
        }
    }

    /// Whether every `→I` binds exactly one occurrence of its variable.
    pub fn is_linear(&self) -> bool {
        let ok_here = match self {
            T::ImplI(v, body) => body.count_free(v) == 1,
            _ => true,
        };
        ok_here && self.children().iter().all(|c| c.is_linear())
    }

    /// Occurrences of `v` not captured by an inner binder of `v`.
    pub fn count_free(&self, v: &TypedVar) -> usize {
        match self {
            T::Var(w) => usize::from(w == v),
            T::ImplI(w, _) if w == v => 0,
            T::DisjE { left, right, scrutinee, left_case, right_case } => {
                scrutinee.count_free(v)
                    + if left == v { 0 } else { left_case.count_free(v) }
                    + if right == v { 0 } else { right_case.count_free(v) }
            }
            T::ExistsE { var, scrutinee, body, .. } => {
                scrutinee.count_free(v) + if var == v { 0 } else { body.count_free(v) }
            }
            _ => self.children().iter().map(|c| c.count_free(v)).sum(),
        }
    }

    pub fn metas(&self, out: &mut BTreeSet<String>) {
        if let T::Meta(m) = self {
            out.insert(m.clone());
        }
        for c in self.children() {
            c.metas(out);
        }
    }

    /// `self[v := u]`, capture-avoiding.
    pub fn subst_var(&self, v: &TypedVar, u: &GroundTerm) -> GroundTerm {
        let mut s = Substitution::default();
        s.terms.insert(v.clone(), u.clone());
        s.apply(self)
    }

    /// `self[x := t]` on individual variables, capture-avoiding.
    pub fn subst_ind(&self, x: &str, t: &IndTerm) -> GroundTerm {
        let mut s = Substitution::default();
        s.inds.insert(x.to_owned(), t.clone());
        s.apply(self)
    }
}

/// Simultaneous capture-avoiding substitution for typed and individual
/// variables. Individual substitution also acts on type annotations.
#[derive(Clone, Debug, Default)]
pub struct Substitution {
    pub terms: BTreeMap<TypedVar, GroundTerm>,
    pub inds: BTreeMap<String, IndTerm>,
}

impl Substitution {
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty() && self.inds.is_empty()
    }

    fn formula(&self, f: &Formula) -> Formula {
        self.inds.iter().fold(f.clone(), |g, (x, t)| g.subst(x, t))
    }

    fn ind(&self, t: &IndTerm) -> IndTerm {
        match t {
            IndTerm::Var(x) => self.inds.get(x).cloned().unwrap_or_else(|| t.clone()),
            IndTerm::Const(_) => t.clone(),
        }
    }

    /// Names that must not be captured by binders below.
    fn range_names(&self) -> (BTreeSet<TypedVar>, BTreeSet<String>) {
        let mut typed = BTreeSet::new();
        let mut inds = BTreeSet::new();
        for u in self.terms.values() {
            typed.extend(u.free_vars());
            inds.extend(u.free_ind_vars());
        }
        for t in self.inds.values() {
            if let IndTerm::Var(x) = t {
                inds.insert(x.clone());
            }
        }
        (typed, inds)
    }

    pub fn apply(&self, t: &GroundTerm) -> GroundTerm {
        if self.is_empty() {
            return t.clone();
        }
        let (typed, inds) = self.range_names();
        let mut avoid_typed = BTreeSet::new();
        let mut avoid_inds = inds.clone();
        t.collect_names(&mut avoid_typed, &mut avoid_inds);
        for v in &typed {
            avoid_typed.insert((v.name.clone(), v.index));
        }
        for u in self.terms.values() {
            u.collect_names(&mut avoid_typed, &mut avoid_inds);
        }
        let mut cx = Ctx { typed, inds, avoid_typed, avoid_inds };
        self.go(t, &mut cx)
    }

    fn go(&self, t: &GroundTerm, cx: &mut Ctx) -> GroundTerm {
        match t {
            T::Var(v) => match self.terms.get(v) {
                Some(u) => u.clone(),
                None => T::Var(v.with_type(self.formula(&v.ty))),
            },
            T::Const(c, f) => T::Const(c.clone(), self.formula(f)),
            T::Meta(m) => T::Meta(m.clone()),
            T::ConjI(a, b) => T::conj_i(self.go(a, cx), self.go(b, cx)),
            T::ImplE(a, b) => T::impl_e(self.go(a, cx), self.go(b, cx)),
            T::Ds(a, b) => T::ds(self.go(a, cx), self.go(b, cx)),
            T::DisjI { side, ty, body } => T::disj_i(*side, self.formula(ty), self.go(body, cx)),
            T::ExistsI { witness, ty, body } => T::exists_i(self.ind(witness), self.formula(ty), self.go(body, cx)),
            T::Explode(f, body) => T::explode(self.formula(f), self.go(body, cx)),
            T::ConjE(side, body) => T::conj_e(*side, self.go(body, cx)),
            T::ForallE(w, body) => T::forall_e(self.ind(w), self.go(body, cx)),
            T::Op(name, args) => T::Op(name.clone(), args.iter().map(|a| self.go(a, cx)).collect()),
            T::ImplI(v, body) => {
                let (v2, inner) = self.under_typed(v, cx);
                T::ImplI(v2, Box::new(inner.go(body, cx)))
            }
            T::DisjE { left, right, scrutinee, left_case, right_case } => {
                let s = self.go(scrutinee, cx);
                let (l2, inner_l) = self.under_typed(left, cx);
                let lc = inner_l.go(left_case, cx);
                let (r2, inner_r) = self.under_typed(right, cx);
                let rc = inner_r.go(right_case, cx);
                T::disj_e(&l2, &r2, s, lc, rc)
            }
            T::ForallI(x, body) => {
                let (x2, inner) = self.under_ind(x, cx);
                T::ForallI(x2, Box::new(inner.go(body, cx)))
            }
            T::ExistsE { ind, var, scrutinee, body } => {
                let s = self.go(scrutinee, cx);
                let (x2, inner) = self.under_ind(ind, cx);
                let (v2, inner) = inner.under_typed(var, cx);
                T::ExistsE { ind: x2, var: v2, scrutinee: Box::new(s), body: Box::new(inner.go(body, cx)) }
            }
        }
    }

    fn under_typed(&self, v: &TypedVar, cx: &mut Ctx) -> (TypedVar, Substitution) {
        let mut inner = self.clone();
        inner.terms.remove(v);
        let ty = self.formula(&v.ty);
        let captures = cx.typed.iter().any(|w| w.name == v.name && w.index == v.index && w.ty == ty);
        let v2 = if captures {
            let index = (1..)
                .find(|i| !cx.avoid_typed.contains(&(v.name.clone(), Some(*i))))
                .expect("unbounded supply of indices");
            cx.avoid_typed.insert((v.name.clone(), Some(index)));
            TypedVar { name: v.name.clone(), index: Some(index), ty }
        } else {
            v.with_type(ty)
        };
        if v2 != *v {
            inner.terms.insert(v.clone(), T::Var(v2.clone()));
        }
        (v2, inner)
    }

    fn under_ind(&self, x: &str, cx: &mut Ctx) -> (String, Substitution) {
        let mut inner = self.clone();
        inner.inds.remove(x);
        if cx.inds.contains(x) {
            let fresh = fresh_name(x, &cx.avoid_inds);
            cx.avoid_inds.insert(fresh.clone());
            inner.inds.insert(x.to_owned(), IndTerm::Var(fresh.clone()));
            (fresh, inner)
        } else {
            (x.to_owned(), inner)
        }
    }
}

struct Ctx {
    typed: BTreeSet<TypedVar>,
    inds: BTreeSet<String>,
    avoid_typed: BTreeSet<(String, Option<u32>)>,
    avoid_inds: BTreeSet<String>,
}

fn paren(f: &Formula) -> String {
    if f.is_atomic() || *f == Formula::Absurd {
        f.to_string()
    } else {
        format!("({f})")
    }
}

impl fmt::Display for GroundTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            T::Var(v) => write!(f, "{v}"),
            T::Const(c, ty) => write!(f, "{c}^{}", paren(ty)),
            T::Meta(m) => write!(f, "?{m}"),
            T::ConjI(a, b) => write!(f, "∧I({a}, {b})"),
            T::DisjI { side, ty, body } => {
                let (a, b) = match ty {
                    Formula::Disj(a, b) => (a.as_ref(), b.as_ref()),
                    other => (other, other),
                };
                write!(f, "∨I[{} ⊢ {ty}]({body})", side.pick(a, b))
            }
            T::ImplI(v, body) => write!(f, "→I{v}({body})"),
            T::ForallI(x, body) => write!(f, "∀I{x}.({body})"),
            T::ExistsI { witness, ty, body } => {
                let inst = match ty {
                    Formula::Exists(x, a) => a.subst(x, witness).to_string(),
                    other => other.to_string(),
                };
                write!(f, "∃I[{inst} ⊢ {ty}]({body})")
            }
            T::Explode(ty, body) => write!(f, "0_{}({body})", paren(ty)),
            T::ConjE(side, body) => write!(f, "∧E{}({body})", side.number()),
            T::DisjE { left, right, scrutinee, left_case, right_case } => {
                write!(f, "∨E {left} {right}.({scrutinee}, {left_case}, {right_case})")
            }
            T::ImplE(a, b) => write!(f, "→E({a}, {b})"),
            T::ForallE(t, body) => write!(f, "∀E {t}({body})"),
            T::ExistsE { ind, var, scrutinee, body } => write!(f, "∃E {ind} {var}.({scrutinee}, {body})"),
            T::Ds(a, b) => write!(f, "DS({a}, {b})"),
            T::Op(name, args) => {
                write!(f, "{name}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Formula {
        Formula::prop("A")
    }

    #[test]
    fn free_vars_respect_binder_types() {
        let xa = TypedVar::new("xi", None, a());
        let xb = TypedVar::new("xi", None, Formula::prop("B"));
        let t = T::impl_i(&xa, T::conj_i(T::var(&xa), T::var(&xb)));
        assert_eq!(t.free_vars(), BTreeSet::from([xb]));
    }

    #[test]
    fn substitution_renames_capturing_binder() {
        let x = TypedVar::new("x", None, a());
        let y = TypedVar::new("y", None, a());
        // →I y. ∧I(x, y)  with x := y
        let t = T::impl_i(&y, T::conj_i(T::var(&x), T::var(&y)));
        let r = t.subst_var(&x, &T::var(&y));
        let T::ImplI(b, body) = &r else { panic!() };
        assert_ne!(b, &y);
        assert_eq!(**body, T::conj_i(T::var(&y), T::var(b)));
    }

    #[test]
    fn individual_substitution_reaches_annotations() {
        let p = |t: &str| Formula::atom("P", vec![IndTerm::parse(&crate::sexp::parse_one(t).unwrap()).unwrap()]);
        let v = TypedVar::new("h", None, p("x"));
        let t = T::var(&v).subst_ind("x", &IndTerm::constant("a"));
        assert_eq!(t, T::Var(TypedVar::new("h", None, p("#a"))));
    }

    #[test]
    fn linearity() {
        let x = TypedVar::new("x", None, a());
        assert!(T::impl_i(&x, T::var(&x)).is_linear());
        assert!(!T::impl_i(&x, T::conj_i(T::var(&x), T::var(&x))).is_linear());
        assert!(!T::impl_i(&x, T::constant("c", a())).is_linear());
    }

    #[test]
    fn display_uses_subscripts() {
        let v = TypedVar::new("ξ", Some(12), Formula::implies(a(), a()));
        assert_eq!(v.to_string(), "ξ₁₂^(A → A)");
    }
}
