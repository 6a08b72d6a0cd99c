//! First-order background language and atomic bases.
//!
//! Individual terms are variables or individual constants; there are no
//! function symbols. Negation is sugar: `not A` is read as `A → 0`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::sexp::{self, arity, ParseError, ParseResult, Sexp};

/// An individual term. In text, constants carry a `#` prefix (`#a`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IndTerm {
    Var(String),
    Const(String),
}

impl IndTerm {
    pub fn var(name: &str) -> Self {
        IndTerm::Var(name.to_owned())
    }

    pub fn constant(name: &str) -> Self {
        IndTerm::Const(name.to_owned())
    }

    pub fn parse(s: &Sexp) -> ParseResult<IndTerm> {
        let a = s.expect_atom("an individual term")?;
        match a.strip_prefix('#') {
            Some("") => Err(s.error("empty constant name")),
            Some(c) => Ok(IndTerm::Const(c.to_owned())),
            None => Ok(IndTerm::Var(a.to_owned())),
        }
    }

    pub fn to_sexp(&self) -> Sexp {
        match self {
            IndTerm::Var(x) => Sexp::atom(x.clone()),
            IndTerm::Const(c) => Sexp::atom(format!("#{c}")),
        }
    }
}

impl fmt::Display for IndTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndTerm::Var(x) | IndTerm::Const(x) => f.write_str(x),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(String, Vec<IndTerm>),
    Absurd,
    Conj(Box<Formula>, Box<Formula>),
    Disj(Box<Formula>, Box<Formula>),
    Impl(Box<Formula>, Box<Formula>),
    Forall(String, Box<Formula>),
    Exists(String, Box<Formula>),
}

impl Formula {
    pub fn atom(pred: &str, args: Vec<IndTerm>) -> Self {
        Formula::Atom(pred.to_owned(), args)
    }

    /// A nullary atom.
    pub fn prop(pred: &str) -> Self {
        Formula::Atom(pred.to_owned(), Vec::new())
    }

    pub fn conj(a: Formula, b: Formula) -> Self {
        Formula::Conj(Box::new(a), Box::new(b))
    }

    pub fn disj(a: Formula, b: Formula) -> Self {
        Formula::Disj(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Formula::Impl(Box::new(a), Box::new(b))
    }

    /// `¬A`, i.e. `A → 0`.
    pub fn not(a: Formula) -> Self {
        Formula::implies(a, Formula::Absurd)
    }

    pub fn forall(x: &str, body: Formula) -> Self {
        Formula::Forall(x.to_owned(), Box::new(body))
    }

    pub fn exists(x: &str, body: Formula) -> Self {
        Formula::Exists(x.to_owned(), Box::new(body))
    }

    pub fn is_atomic(&self) -> bool {
        matches!(self, Formula::Atom(..))
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(_, args) => {
                for t in args {
                    if let IndTerm::Var(x) = t {
                        if !bound.contains(x) {
                            out.insert(x.clone());
                        }
                    }
                }
            }
            Formula::Absurd => {}
            Formula::Conj(a, b) | Formula::Disj(a, b) | Formula::Impl(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Forall(x, body) | Formula::Exists(x, body) => {
                bound.push(x.clone());
                body.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    /// Every individual-variable name occurring anywhere, bound or free.
    pub fn all_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(_, args) => {
                for t in args {
                    if let IndTerm::Var(x) = t {
                        out.insert(x.clone());
                    }
                }
            }
            Formula::Absurd => {}
            Formula::Conj(a, b) | Formula::Disj(a, b) | Formula::Impl(a, b) => {
                a.all_vars(out);
                b.all_vars(out);
            }
            Formula::Forall(x, body) | Formula::Exists(x, body) => {
                out.insert(x.clone());
                body.all_vars(out);
            }
        }
    }

    pub fn is_closed(&self) -> bool {
        self.free_vars().is_empty()
    }

    pub fn constants(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(_, args) => {
                for t in args {
                    if let IndTerm::Const(c) = t {
                        out.insert(c.clone());
                    }
                }
            }
            Formula::Absurd => {}
            Formula::Conj(a, b) | Formula::Disj(a, b) | Formula::Impl(a, b) => {
                a.constants(out);
                b.constants(out);
            }
            Formula::Forall(_, body) | Formula::Exists(_, body) => body.constants(out),
        }
    }

    /// Capture-avoiding substitution of `t` for the free variable `x`.
    pub fn subst(&self, x: &str, t: &IndTerm) -> Formula {
        match self {
            Formula::Atom(p, args) => Formula::Atom(
                p.clone(),
                args.iter()
                    .map(|a| match a {
                        IndTerm::Var(y) if y == x => t.clone(),
                        other => other.clone(),
                    })
                    .collect(),
            ),
            Formula::Absurd => Formula::Absurd,
            Formula::Conj(a, b) => Formula::conj(a.subst(x, t), b.subst(x, t)),
            Formula::Disj(a, b) => Formula::disj(a.subst(x, t), b.subst(x, t)),
            Formula::Impl(a, b) => Formula::implies(a.subst(x, t), b.subst(x, t)),
            Formula::Forall(y, body) | Formula::Exists(y, body) => {
                let rebuild = |y: String, b: Formula| match self {
                    Formula::Forall(..) => Formula::Forall(y, Box::new(b)),
                    _ => Formula::Exists(y, Box::new(b)),
                };
                if y == x || !body.free_vars().contains(x) {
                    return self.clone();
                }
                if matches!(t, IndTerm::Var(z) if z == y) {
                    let mut avoid = BTreeSet::new();
                    body.all_vars(&mut avoid);
                    avoid.insert(x.to_owned());
                    let fresh = fresh_name(y, &avoid);
                    let renamed = body.subst(y, &IndTerm::Var(fresh.clone()));
                    rebuild(fresh, renamed.subst(x, t))
                } else {
                    rebuild(y.clone(), body.subst(x, t))
                }
            }
        }
    }

    /// Equality up to renaming of bound individual variables.
    pub fn alpha_eq(&self, other: &Formula) -> bool {
        fn go(a: &Formula, b: &Formula, env: &mut Vec<(String, String)>) -> bool {
            match (a, b) {
                (Formula::Atom(p, xs), Formula::Atom(q, ys)) => {
                    p == q
                        && xs.len() == ys.len()
                        && xs.iter().zip(ys).all(|(x, y)| match (x, y) {
                            (IndTerm::Const(c), IndTerm::Const(d)) => c == d,
                            (IndTerm::Var(u), IndTerm::Var(v)) => {
                                match env.iter().rev().find(|(l, r)| l == u || r == v) {
                                    Some((l, r)) => l == u && r == v,
                                    None => u == v,
                                }
                            }
                            _ => false,
                        })
                }
                (Formula::Absurd, Formula::Absurd) => true,
                (Formula::Conj(a1, a2), Formula::Conj(b1, b2))
                | (Formula::Disj(a1, a2), Formula::Disj(b1, b2))
                | (Formula::Impl(a1, a2), Formula::Impl(b1, b2)) => go(a1, b1, env) && go(a2, b2, env),
                (Formula::Forall(x, a), Formula::Forall(y, b))
                | (Formula::Exists(x, a), Formula::Exists(y, b)) => {
                    env.push((x.clone(), y.clone()));
                    let r = go(a, b, env);
                    env.pop();
                    r
                }
                _ => false,
            }
        }
        go(self, other, &mut Vec::new())
    }

    pub fn parse(s: &Sexp) -> ParseResult<Formula> {
        if let Some(a) = s.as_atom() {
            return match a {
                "0" | "absurd" => Ok(Formula::Absurd),
                _ => Err(s.error(format!("expected a formula, found `{a}`"))),
            };
        }
        let (head, args) = s.expect_head("a formula")?;
        let binary = |args: &[Sexp]| -> ParseResult<(Formula, Formula)> {
            arity(s, head, args, 2)?;
            Ok((Formula::parse(&args[0])?, Formula::parse(&args[1])?))
        };
        match head {
            "atom" => {
                let (p, rest) = args
                    .split_first()
                    .ok_or_else(|| s.error("`atom` needs a predicate name"))?;
                let pred = p.expect_atom("a predicate name")?.to_owned();
                let terms = rest.iter().map(IndTerm::parse).collect::<ParseResult<_>>()?;
                Ok(Formula::Atom(pred, terms))
            }
            "absurd" => {
                arity(s, head, args, 0)?;
                Ok(Formula::Absurd)
            }
            "and" => binary(args).map(|(a, b)| Formula::conj(a, b)),
            "or" => binary(args).map(|(a, b)| Formula::disj(a, b)),
            "impl" => binary(args).map(|(a, b)| Formula::implies(a, b)),
            "not" => {
                arity(s, head, args, 1)?;
                Ok(Formula::not(Formula::parse(&args[0])?))
            }
            "forall" | "exists" => {
                arity(s, head, args, 2)?;
                let x = args[0].expect_atom("a bound variable")?;
                if x.starts_with('#') {
                    return Err(args[0].error("cannot bind a constant"));
                }
                let body = Formula::parse(&args[1])?;
                Ok(if head == "forall" { Formula::forall(x, body) } else { Formula::exists(x, body) })
            }
            other => Err(s.error(format!("unknown formula constructor `{other}`"))),
        }
    }

    pub fn to_sexp(&self) -> Sexp {
        match self {
            Formula::Atom(p, args) => Sexp::tagged(
                "atom",
                std::iter::once(Sexp::atom(p.clone())).chain(args.iter().map(IndTerm::to_sexp)),
            ),
            Formula::Absurd => Sexp::tagged("absurd", []),
            Formula::Conj(a, b) => Sexp::tagged("and", [a.to_sexp(), b.to_sexp()]),
            Formula::Disj(a, b) => Sexp::tagged("or", [a.to_sexp(), b.to_sexp()]),
            Formula::Impl(a, b) => Sexp::tagged("impl", [a.to_sexp(), b.to_sexp()]),
            Formula::Forall(x, b) => Sexp::tagged("forall", [Sexp::atom(x.clone()), b.to_sexp()]),
            Formula::Exists(x, b) => Sexp::tagged("exists", [Sexp::atom(x.clone()), b.to_sexp()]),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Impl(..) => 1,
            Formula::Disj(..) => 2,
            Formula::Conj(..) => 3,
            _ => 4,
        }
    }
}

pub(crate) fn fresh_name(base: &str, avoid: &BTreeSet<String>) -> String {
    let stem = base.trim_end_matches(|c: char| c.is_ascii_digit() || c == '\'');
    (1..)
        .map(|i| format!("{stem}{i}"))
        .find(|n| !avoid.contains(n))
        .expect("unbounded supply of names")
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sub = |f: &mut fmt::Formatter<'_>, g: &Formula, min: u8| {
            if g.precedence() < min {
                write!(f, "({g})")
            } else {
                write!(f, "{g}")
            }
        };
        match self {
            Formula::Atom(p, args) if args.is_empty() => f.write_str(p),
            Formula::Atom(p, args) => {
                write!(f, "{p}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
            Formula::Absurd => f.write_str("0"),
            Formula::Conj(a, b) => {
                sub(f, a, 4)?;
                f.write_str(" ∧ ")?;
                sub(f, b, 4)
            }
            Formula::Disj(a, b) => {
                sub(f, a, 3)?;
                f.write_str(" ∨ ")?;
                sub(f, b, 3)
            }
            Formula::Impl(a, b) => {
                sub(f, a, 2)?;
                f.write_str(" → ")?;
                sub(f, b, 1)
            }
            Formula::Forall(x, b) => {
                write!(f, "∀{x} ")?;
                sub(f, b, 4)
            }
            Formula::Exists(x, b) => {
                write!(f, "∃{x} ")?;
                sub(f, b, 4)
            }
        }
    }
}

/// Variable assignment produced by matching a rule against a formula.
pub type Instantiation = BTreeMap<String, IndTerm>;

/// Extends `inst` so that `pattern` instantiated by it equals `target`.
/// Both must be atoms.
pub fn match_atom(pattern: &Formula, target: &Formula, inst: &mut Instantiation) -> bool {
    let (Formula::Atom(p, xs), Formula::Atom(q, ys)) = (pattern, target) else {
        return false;
    };
    if p != q || xs.len() != ys.len() {
        return false;
    }
    for (x, y) in xs.iter().zip(ys) {
        match x {
            IndTerm::Const(_) if x != y => return false,
            IndTerm::Const(_) => {}
            IndTerm::Var(v) => match inst.get(v) {
                Some(bound) if bound != y => return false,
                Some(_) => {}
                None => {
                    inst.insert(v.clone(), y.clone());
                }
            },
        }
    }
    true
}

/// An atomic (Post-system) rule `A1, ..., An / B`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AtomicRule {
    pub premises: Vec<Formula>,
    pub conclusion: Formula,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RuleViolation {
    #[error("premise {index} (`{formula}`) is not atomic")]
    NonAtomicPremise { index: usize, formula: Formula },
    #[error("premise {index} is the absurdity constant 0")]
    AbsurdPremise { index: usize },
    #[error("conclusion `{0}` is not atomic")]
    NonAtomicConclusion(Formula),
    #[error("variable `{0}` is free in the conclusion but in no premise")]
    UnboundConclusionVariable(String),
}

impl AtomicRule {
    pub fn new(premises: Vec<Formula>, conclusion: Formula) -> Self {
        AtomicRule { premises, conclusion }
    }

    /// Checks that all formulas are atoms, no premise is `0`, and every
    /// variable of the conclusion occurs in some premise. `0` is accepted
    /// as a conclusion.
    pub fn validate(&self) -> Result<(), RuleViolation> {
        for (index, p) in self.premises.iter().enumerate() {
            match p {
                Formula::Absurd => return Err(RuleViolation::AbsurdPremise { index }),
                Formula::Atom(..) => {}
                _ => return Err(RuleViolation::NonAtomicPremise { index, formula: p.clone() }),
            }
        }
        if !matches!(self.conclusion, Formula::Atom(..) | Formula::Absurd) {
            return Err(RuleViolation::NonAtomicConclusion(self.conclusion.clone()));
        }
        let premise_vars: BTreeSet<String> = self.premises.iter().flat_map(Formula::free_vars).collect();
        if let Some(x) = self.conclusion.free_vars().difference(&premise_vars).next() {
            return Err(RuleViolation::UnboundConclusionVariable(x.clone()));
        }
        Ok(())
    }

    pub fn parse(s: &Sexp) -> ParseResult<(Option<String>, AtomicRule)> {
        let (head, args) = s.expect_head("a rule")?;
        if head != "rule" {
            return Err(s.error(format!("expected `rule`, found `{head}`")));
        }
        let (name, args) = match args.first().and_then(Sexp::as_atom) {
            Some(n) => (Some(n.to_owned()), &args[1..]),
            None => (None, args),
        };
        let mut premises = Vec::new();
        let mut conclusion = None;
        for part in args {
            match part.expect_head("`premises` or `conclusion`")? {
                ("premises", fs) => {
                    premises = fs.iter().map(Formula::parse).collect::<ParseResult<_>>()?;
                }
                ("conclusion", [f]) => conclusion = Some(Formula::parse(f)?),
                (other, _) => return Err(part.error(format!("unexpected `{other}` in rule"))),
            }
        }
        let conclusion = conclusion.ok_or_else(|| s.error("rule without conclusion"))?;
        Ok((name, AtomicRule::new(premises, conclusion)))
    }

    pub fn to_sexp(&self, name: Option<&str>) -> Sexp {
        let mut items = vec![Sexp::atom("rule")];
        if let Some(n) = name {
            items.push(Sexp::atom(n));
        }
        items.push(Sexp::tagged("premises", self.premises.iter().map(Formula::to_sexp)));
        items.push(Sexp::tagged("conclusion", [self.conclusion.to_sexp()]));
        Sexp::list(items)
    }
}

impl fmt::Display for AtomicRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.premises.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, " ⊢ {}", self.conclusion)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BaseError {
    #[error("rule {index}: {violation}")]
    BadRule { index: usize, violation: RuleViolation },
    #[error("rule {index} mentions undeclared individual constant `{name}`")]
    UndeclaredConstant { index: usize, name: String },
    #[error("rule {index} mentions undeclared relation `{name}`/{arity}")]
    UndeclaredRelation { index: usize, name: String, arity: usize },
}

/// Individual constants, relational constants with arities, and atomic rules.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AtomicBase {
    pub individuals: BTreeSet<String>,
    pub relations: BTreeMap<String, usize>,
    pub rules: Vec<AtomicRule>,
    pub rule_names: Vec<Option<String>>,
}

impl AtomicBase {
    /// Builds a base, validating every rule and the constants it mentions.
    pub fn new(
        individuals: BTreeSet<String>,
        relations: BTreeMap<String, usize>,
        rules: Vec<(Option<String>, AtomicRule)>,
    ) -> Result<Self, BaseError> {
        let mut base = AtomicBase { individuals, relations, ..Default::default() };
        for (name, rule) in rules {
            base.add_rule(name, rule)?;
        }
        Ok(base)
    }

    pub fn add_rule(&mut self, name: Option<String>, rule: AtomicRule) -> Result<(), BaseError> {
        let index = self.rules.len();
        rule.validate().map_err(|violation| BaseError::BadRule { index, violation })?;
        for f in rule.premises.iter().chain([&rule.conclusion]) {
            self.check_declared(f).map_err(|e| match e {
                Undeclared::Constant(name) => BaseError::UndeclaredConstant { index, name },
                Undeclared::Relation(name, arity) => BaseError::UndeclaredRelation { index, name, arity },
            })?;
        }
        self.rules.push(rule);
        self.rule_names.push(name);
        Ok(())
    }

    fn check_declared(&self, f: &Formula) -> Result<(), Undeclared> {
        let mut consts = BTreeSet::new();
        f.constants(&mut consts);
        if let Some(c) = consts.into_iter().find(|c| !self.individuals.contains(c)) {
            return Err(Undeclared::Constant(c));
        }
        if let Formula::Atom(p, args) = f {
            if self.relations.get(p) != Some(&args.len()) {
                return Err(Undeclared::Relation(p.clone(), args.len()));
            }
        }
        Ok(())
    }

    pub fn contains_rule(&self, rule: &AtomicRule) -> bool {
        self.rules.contains(rule)
    }

    pub fn rule_by_name(&self, name: &str) -> Option<&AtomicRule> {
        self.rule_names
            .iter()
            .position(|n| n.as_deref() == Some(name))
            .map(|i| &self.rules[i])
    }

    pub fn to_sexps(&self) -> Vec<Sexp> {
        let mut out = Vec::new();
        if !self.individuals.is_empty() {
            out.push(Sexp::tagged("individuals", self.individuals.iter().map(|c| Sexp::atom(c.clone()))));
        }
        for (r, n) in &self.relations {
            out.push(Sexp::tagged("relation", [Sexp::atom(r.clone()), Sexp::atom(n.to_string())]));
        }
        for (rule, name) in self.rules.iter().zip(&self.rule_names) {
            out.push(rule.to_sexp(name.as_deref()));
        }
        out
    }
}

enum Undeclared {
    Constant(String),
    Relation(String, usize),
}

/// A derivation tree in the atomic system; each node records the rule applied.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AtomicDerivation {
    pub conclusion: Formula,
    pub rule: AtomicRule,
    pub children: Vec<AtomicDerivation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DerivationError {
    #[error("at {path:?}: rule `{rule}` is not in the base")]
    UnknownRule { path: Vec<usize>, rule: AtomicRule },
    #[error("at {path:?}: `{formula}` is open")]
    OpenLeaf { path: Vec<usize>, formula: Formula },
    #[error("at {path:?}: {detail}")]
    InstantiationMismatch { path: Vec<usize>, detail: String },
}

impl AtomicDerivation {
    pub fn leaf(conclusion: Formula, rule: AtomicRule) -> Self {
        AtomicDerivation { conclusion, rule, children: Vec::new() }
    }

    /// Checks every node is an instance of a base rule and every formula is closed.
    pub fn check(&self, base: &AtomicBase) -> Result<(), DerivationError> {
        self.check_at(base, &mut Vec::new())
    }

    fn check_at(&self, base: &AtomicBase, path: &mut Vec<usize>) -> Result<(), DerivationError> {
        if !base.contains_rule(&self.rule) {
            return Err(DerivationError::UnknownRule { path: path.clone(), rule: self.rule.clone() });
        }
        if !self.conclusion.is_closed() {
            return Err(DerivationError::OpenLeaf { path: path.clone(), formula: self.conclusion.clone() });
        }
        if self.children.len() != self.rule.premises.len() {
            let detail = format!(
                "rule has {} premise(s) but the node has {} child(ren)",
                self.rule.premises.len(),
                self.children.len()
            );
            return Err(DerivationError::InstantiationMismatch { path: path.clone(), detail });
        }
        let mut inst = Instantiation::new();
        let mismatch = |what: String| DerivationError::InstantiationMismatch { path: path.clone(), detail: what };
        if !match_conclusion(&self.rule.conclusion, &self.conclusion, &mut inst) {
            return Err(mismatch(format!("`{}` is not an instance of `{}`", self.conclusion, self.rule.conclusion)));
        }
        for (premise, child) in self.rule.premises.iter().zip(&self.children) {
            if !match_atom(premise, &child.conclusion, &mut inst) {
                return Err(mismatch(format!(
                    "child `{}` does not instantiate premise `{premise}` consistently",
                    child.conclusion
                )));
            }
        }
        for (i, child) in self.children.iter().enumerate() {
            path.push(i);
            child.check_at(base, path)?;
            path.pop();
        }
        Ok(())
    }

    pub fn parse(s: &Sexp) -> ParseResult<AtomicDerivation> {
        let (head, args) = s.expect_head("a derivation")?;
        if head != "derive" || args.len() < 2 {
            return Err(s.error("expected `(derive FORMULA (rule ...) CHILD...)`"));
        }
        let conclusion = Formula::parse(&args[0])?;
        let (_, rule) = AtomicRule::parse(&args[1])?;
        let children = args[2..].iter().map(AtomicDerivation::parse).collect::<ParseResult<_>>()?;
        Ok(AtomicDerivation { conclusion, rule, children })
    }

    pub fn to_sexp(&self) -> Sexp {
        Sexp::tagged(
            "derive",
            [self.conclusion.to_sexp(), self.rule.to_sexp(None)]
                .into_iter()
                .chain(self.children.iter().map(AtomicDerivation::to_sexp)),
        )
    }
}

fn match_conclusion(pattern: &Formula, target: &Formula, inst: &mut Instantiation) -> bool {
    match (pattern, target) {
        (Formula::Absurd, Formula::Absurd) => true,
        _ => match_atom(pattern, target, inst),
    }
}

/// Reads the base declarations (`individuals`, `relation`, `rule`) among
/// `forms`, ignoring any other form.
pub fn parse_base(forms: &[Sexp]) -> ParseResult<AtomicBase> {
    let mut individuals = BTreeSet::new();
    let mut relations = BTreeMap::new();
    let mut rules = Vec::new();
    for form in forms {
        match form.head() {
            Some(("individuals", cs)) => {
                for c in cs {
                    individuals.insert(c.expect_atom("a constant")?.trim_start_matches('#').to_owned());
                }
            }
            Some(("relation", [name, n])) => {
                relations.insert(name.expect_atom("a relation name")?.to_owned(), sexp::parse_u32(n)? as usize);
            }
            Some(("rule", _)) => rules.push((form.pos(), AtomicRule::parse(form)?)),
            _ => {}
        }
    }
    let mut base = AtomicBase { individuals, relations, ..Default::default() };
    for (pos, (name, rule)) in rules {
        base.add_rule(name, rule).map_err(|e| ParseError::new(pos, e.to_string()))?;
    }
    Ok(base)
}
