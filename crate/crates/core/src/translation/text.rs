//! Text syntax for translation environments.
//!
//! ```text
//! (environment
//!   (bounds 2 () (0) (1) (0 1))
//!   (fax-depth 2)
//!   (atom 1 (one))
//!   (atom 0 (zero))
//!   (constant bomb (design (base (pos ε)) (pos ε ()))))
//! ```
//!
//! An atom is `(one)`, `(zero)`, `(top)` or `(generators DESIGN...)`, always
//! taken within the environment's bounds; `fax-depth` defaults to the depth
//! of the bounds.

use super::TranslationEnv;
use crate::behaviour::text::{bounds_to_sexp, parse_bounds};
use crate::behaviour::{one, top, zero, Behaviour};
use crate::ludics::text::{design_to_sexp, parse_designs_with};
use crate::ludics::{Address, Design};
use crate::sexp::{self, ParseResult, Sexp};

fn parse_atom(
    s: &Sexp,
    env: &TranslationEnv,
    load: &mut dyn FnMut(&Sexp, &str) -> ParseResult<Vec<Design>>,
) -> ParseResult<Behaviour> {
    let bounds = env.bounds.clone();
    let root = Address::root();
    let built = match s.expect_head("`(one)`, `(zero)`, `(top)` or `(generators ...)`")? {
        ("one", []) => one(&root, bounds),
        ("zero", []) => zero(&root, bounds),
        ("top", []) => top(&root, bounds),
        ("generators", items) => Behaviour::generate(parse_designs_with(items, load)?, bounds, env.fuel),
        (other, _) => return Err(s.error(format!("unknown behaviour `{other}`"))),
    };
    built.map_err(|e| s.error(e.to_string()))
}

pub fn parse_environment_with(
    s: &Sexp,
    fuel: usize,
    load: &mut dyn FnMut(&Sexp, &str) -> ParseResult<Vec<Design>>,
) -> ParseResult<TranslationEnv> {
    let ("environment", parts) = s.expect_head("`(environment (bounds ...) ...)`")? else {
        return Err(s.error("expected `(environment (bounds ...) ...)`"));
    };
    let Some((first, rest)) = parts.split_first() else {
        return Err(s.error("an environment starts with `(bounds ...)`"));
    };
    let mut env = TranslationEnv::new(parse_bounds(first)?);
    env.fuel = fuel;
    for part in rest {
        match part.expect_head("an environment entry")? {
            ("fax-depth", [n]) => env.fax_depth = sexp::parse_u32(n)? as usize,
            ("atom", [name, value]) => {
                let b = parse_atom(value, &env, load)?;
                env.atoms.insert(name.expect_atom("an atom name")?.to_owned(), b);
            }
            ("constant", [name, value]) => {
                let mut ds = parse_designs_with(std::slice::from_ref(value), load)?;
                if ds.len() != 1 {
                    return Err(value.error("a constant is one design"));
                }
                env.constants.insert(name.expect_atom("a constant name")?.to_owned(), ds.remove(0));
            }
            (other, _) => return Err(part.error(format!("unexpected `{other}` entry"))),
        }
    }
    Ok(env)
}

/// The single environment of `src`; `(file ...)` references are rejected.
pub fn parse_environment(src: &str, fuel: usize) -> ParseResult<TranslationEnv> {
    parse_environment_with(&sexp::parse_one(src)?, fuel, &mut |form, _| {
        Err(form.error("file references are not allowed here"))
    })
}

/// Atoms are written out by their generators.
pub fn environment_to_sexp(env: &TranslationEnv) -> Sexp {
    let mut items = vec![bounds_to_sexp(&env.bounds), Sexp::tagged("fax-depth", [Sexp::atom(env.fax_depth.to_string())])];
    for (name, b) in &env.atoms {
        let gens = Sexp::tagged("generators", b.generators.iter().map(design_to_sexp));
        items.push(Sexp::tagged("atom", [Sexp::atom(name.clone()), gens]));
    }
    for (name, d) in &env.constants {
        items.push(Sexp::tagged("constant", [Sexp::atom(name.clone()), design_to_sexp(d)]));
    }
    Sexp::tagged("environment", items)
}

pub fn environment_to_string(env: &TranslationEnv) -> String {
    sexp::pretty(&environment_to_sexp(env), 78)
}
