//! Text syntax for ground terms and `.gt` files.
//!
//! ```text
//! (individuals a b) (relation P 1)
//! (rule axiom-p (premises) (conclusion (atom P #a)))
//! (constant c (atom P #a) (derive (atom P #a) (rule (premises) (conclusion (atom P #a)))))
//! (op f ((atom A)) (atom B))
//! (equation f-def (app f (meta X)) (app f1 (meta X) (meta X)))
//! (term (impl-i (var xi (atom A)) (var xi (atom A))))
//! ```

use super::language::Language;
use super::term::{GroundTerm, Side, TypedVar};
use crate::background::{parse_base, AtomicDerivation, Formula, IndTerm};
use crate::sexp::{self, arity, ParseResult, Sexp};

use GroundTerm as T;

pub fn parse_var(s: &Sexp) -> ParseResult<TypedVar> {
    let (head, args) = s.expect_head("a typed variable `(var NAME [INDEX] TYPE)`")?;
    if head != "var" {
        return Err(s.error(format!("expected `var`, found `{head}`")));
    }
    match args {
        [name, ty] => Ok(TypedVar::new(name.expect_atom("a variable name")?, None, Formula::parse(ty)?)),
        [name, index, ty] => Ok(TypedVar::new(
            name.expect_atom("a variable name")?,
            Some(sexp::parse_u32(index)?),
            Formula::parse(ty)?,
        )),
        _ => Err(s.error("`var` takes a name, an optional index and a type")),
    }
}

pub fn var_to_sexp(v: &TypedVar) -> Sexp {
    let mut items = vec![Sexp::atom("var"), Sexp::atom(v.name.clone())];
    if let Some(i) = v.index {
        items.push(Sexp::atom(i.to_string()));
    }
    items.push(v.ty.to_sexp());
    Sexp::list(items)
}

fn parse_side(s: &Sexp) -> ParseResult<Side> {
    Side::from_number(sexp::parse_u32(s)?).ok_or_else(|| s.error("side must be 1 or 2"))
}

fn ind_binder(s: &Sexp) -> ParseResult<String> {
    let x = s.expect_atom("an individual variable")?;
    if x.starts_with('#') {
        return Err(s.error("cannot bind a constant"));
    }
    Ok(x.to_owned())
}

pub fn parse_term(s: &Sexp) -> ParseResult<GroundTerm> {
    let (head, args) = s.expect_head("a ground term")?;
    let n = |k: usize| arity(s, head, args, k);
    let sub = |i: usize| -> ParseResult<Box<GroundTerm>> { parse_term(&args[i]).map(Box::new) };
    Ok(match head {
        "var" => T::Var(parse_var(s)?),
        "const" => {
            n(2)?;
            T::Const(args[0].expect_atom("a constant name")?.to_owned(), Formula::parse(&args[1])?)
        }
        "meta" => {
            n(1)?;
            T::Meta(args[0].expect_atom("a metavariable")?.to_owned())
        }
        "and-i" => {
            n(2)?;
            T::ConjI(sub(0)?, sub(1)?)
        }
        "or-i" => {
            n(3)?;
            T::DisjI { side: parse_side(&args[0])?, ty: Formula::parse(&args[1])?, body: sub(2)? }
        }
        "impl-i" => {
            n(2)?;
            T::ImplI(parse_var(&args[0])?, sub(1)?)
        }
        "forall-i" => {
            n(2)?;
            T::ForallI(ind_binder(&args[0])?, sub(1)?)
        }
        "exists-i" => {
            n(3)?;
            T::ExistsI { witness: IndTerm::parse(&args[0])?, ty: Formula::parse(&args[1])?, body: sub(2)? }
        }
        "explode" => {
            n(2)?;
            T::Explode(Formula::parse(&args[0])?, sub(1)?)
        }
        "and-e" => {
            n(2)?;
            T::ConjE(parse_side(&args[0])?, sub(1)?)
        }
        "or-e" => {
            n(5)?;
            T::DisjE {
                left: parse_var(&args[0])?,
                right: parse_var(&args[1])?,
                scrutinee: sub(2)?,
                left_case: sub(3)?,
                right_case: sub(4)?,
            }
        }
        "impl-e" => {
            n(2)?;
            T::ImplE(sub(0)?, sub(1)?)
        }
        "forall-e" => {
            n(2)?;
            T::ForallE(IndTerm::parse(&args[0])?, sub(1)?)
        }
        "exists-e" => {
            n(4)?;
            T::ExistsE { ind: ind_binder(&args[0])?, var: parse_var(&args[1])?, scrutinee: sub(2)?, body: sub(3)? }
        }
        "ds" => {
            n(2)?;
            T::Ds(sub(0)?, sub(1)?)
        }
        "app" => {
            let (f, rest) = args.split_first().ok_or_else(|| s.error("`app` needs an operation name"))?;
            T::Op(f.expect_atom("an operation name")?.to_owned(), rest.iter().map(parse_term).collect::<ParseResult<_>>()?)
        }
        other => return Err(s.error(format!("unknown term constructor `{other}`"))),
    })
}

pub fn term_to_sexp(t: &GroundTerm) -> Sexp {
    let side = |s: &Side| Sexp::atom(s.number().to_string());
    let ind_var = |x: &str| Sexp::atom(x.to_owned());
    match t {
        T::Var(v) => var_to_sexp(v),
        T::Const(c, f) => Sexp::tagged("const", [Sexp::atom(c.clone()), f.to_sexp()]),
        T::Meta(m) => Sexp::tagged("meta", [Sexp::atom(m.clone())]),
        T::ConjI(a, b) => Sexp::tagged("and-i", [term_to_sexp(a), term_to_sexp(b)]),
        T::DisjI { side: s, ty, body } => Sexp::tagged("or-i", [side(s), ty.to_sexp(), term_to_sexp(body)]),
        T::ImplI(v, body) => Sexp::tagged("impl-i", [var_to_sexp(v), term_to_sexp(body)]),
        T::ForallI(x, body) => Sexp::tagged("forall-i", [ind_var(x), term_to_sexp(body)]),
        T::ExistsI { witness, ty, body } => {
            Sexp::tagged("exists-i", [witness.to_sexp(), ty.to_sexp(), term_to_sexp(body)])
        }
        T::Explode(f, body) => Sexp::tagged("explode", [f.to_sexp(), term_to_sexp(body)]),
        T::ConjE(s, body) => Sexp::tagged("and-e", [side(s), term_to_sexp(body)]),
        T::DisjE { left, right, scrutinee, left_case, right_case } => Sexp::tagged(
            "or-e",
            [
                var_to_sexp(left),
                var_to_sexp(right),
                term_to_sexp(scrutinee),
                term_to_sexp(left_case),
                term_to_sexp(right_case),
            ],
        ),
        T::ImplE(a, b) => Sexp::tagged("impl-e", [term_to_sexp(a), term_to_sexp(b)]),
        T::ForallE(w, body) => Sexp::tagged("forall-e", [w.to_sexp(), term_to_sexp(body)]),
        T::ExistsE { ind, var, scrutinee, body } => Sexp::tagged(
            "exists-e",
            [ind_var(ind), var_to_sexp(var), term_to_sexp(scrutinee), term_to_sexp(body)],
        ),
        T::Ds(a, b) => Sexp::tagged("ds", [term_to_sexp(a), term_to_sexp(b)]),
        T::Op(f, args) => Sexp::tagged("app", std::iter::once(Sexp::atom(f.clone())).chain(args.iter().map(term_to_sexp))),
    }
}

/// A parsed `.gt` file: the language it declares and its `(term ...)` forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundFile {
    pub language: Language,
    pub terms: Vec<GroundTerm>,
}

pub fn parse_ground_file(src: &str) -> ParseResult<GroundFile> {
    parse_ground_forms(&sexp::parse_all(src)?)
}

pub fn parse_ground_forms(forms: &[Sexp]) -> ParseResult<GroundFile> {
    let mut language = Language::new(parse_base(forms)?);
    let mut terms = Vec::new();
    for form in forms {
        let Some((head, args)) = form.head() else {
            return Err(form.error("expected a declaration"));
        };
        match head {
            "individuals" | "relation" | "rule" => {}
            "constant" => {
                if !(2..=3).contains(&args.len()) {
                    return Err(form.error("`constant` takes a name, a type and an optional derivation"));
                }
                let name = args[0].expect_atom("a constant name")?;
                let ty = Formula::parse(&args[1])?;
                let derivation = args.get(2).map(AtomicDerivation::parse).transpose()?;
                language.add_constant(name, ty, derivation).map_err(|e| form.error(e.to_string()))?;
            }
            "op" => {
                arity(form, head, args, 3)?;
                let params = args[1]
                    .expect_list("a list of parameter types")?
                    .iter()
                    .map(Formula::parse)
                    .collect::<ParseResult<_>>()?;
                language
                    .add_op(args[0].expect_atom("an operation name")?, params, Formula::parse(&args[2])?)
                    .map_err(|e| form.error(e.to_string()))?;
            }
            "equation" => {
                arity(form, head, args, 3)?;
                language
                    .add_equation(args[0].expect_atom("an equation name")?, parse_term(&args[1])?, parse_term(&args[2])?)
                    .map_err(|e| form.error(e.to_string()))?;
            }
            "term" => {
                arity(form, head, args, 1)?;
                terms.push(parse_term(&args[0])?);
            }
            other => return Err(form.error(format!("unknown declaration `{other}`"))),
        }
    }
    Ok(GroundFile { language, terms })
}

pub fn ground_file_to_sexps(file: &GroundFile) -> Vec<Sexp> {
    let lang = &file.language;
    let mut out = lang.base.to_sexps();
    for (name, decl) in &lang.constants {
        let mut items = vec![Sexp::atom("constant"), Sexp::atom(name.clone()), decl.ty.to_sexp()];
        if let Some(d) = &decl.derivation {
            items.push(d.to_sexp());
        }
        out.push(Sexp::list(items));
    }
    for (name, sig) in &lang.ops {
        out.push(Sexp::tagged(
            "op",
            [Sexp::atom(name.clone()), Sexp::list(sig.params.iter().map(Formula::to_sexp).collect()), sig.result.to_sexp()],
        ));
    }
    for e in &lang.equations {
        out.push(Sexp::tagged("equation", [Sexp::atom(e.name.clone()), term_to_sexp(&e.lhs), term_to_sexp(&e.rhs)]));
    }
    for t in &file.terms {
        out.push(Sexp::tagged("term", [term_to_sexp(t)]));
    }
    out
}
