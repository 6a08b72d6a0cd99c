//! Text syntax for behaviours (`.bhv`).
//!
//! ```text
//! (behaviour
//!   (bounds 3 () (0) (1) (0 1))
//!   (generators (design (base (pos 0)) (pos 0 ()))))
//! ```
//!
//! `(bounds DEPTH RAMIFICATION...)` fixes the universe. A generator may also
//! be `(file "bomb.dsn")` when the caller knows how to load files.

use super::{Behaviour, BehaviourError, UniverseBounds};
use crate::ludics::text::{design_to_sexp, parse_designs_with, parse_ramification, ram_to_sexp};
use crate::ludics::Design;
use crate::sexp::{self, ParseResult, Sexp};

/// A behaviour as written: its generators and the universe they live in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BehaviourSpec {
    pub bounds: UniverseBounds,
    pub generators: Vec<Design>,
}

impl BehaviourSpec {
    pub fn build(&self, fuel: usize) -> Result<Behaviour, BehaviourError> {
        Behaviour::generate(self.generators.clone(), self.bounds.clone(), fuel)
    }
}

pub fn parse_bounds(s: &Sexp) -> ParseResult<UniverseBounds> {
    match s.expect_head("`(bounds DEPTH (i...)...)`")? {
        ("bounds", [depth, pool @ ..]) => {
            let depth = sexp::parse_u32(depth)? as usize;
            if depth == 0 {
                return Err(s.error("depth must be at least 1"));
            }
            Ok(UniverseBounds::new(depth, pool.iter().map(parse_ramification).collect::<ParseResult<Vec<_>>>()?))
        }
        _ => Err(s.error("expected `(bounds DEPTH (i...)...)`")),
    }
}

pub fn bounds_to_sexp(b: &UniverseBounds) -> Sexp {
    let depth = Sexp::atom(b.max_depth.to_string());
    Sexp::tagged("bounds", std::iter::once(depth).chain(b.pool.iter().map(ram_to_sexp)))
}

pub fn parse_behaviour_with(
    s: &Sexp,
    load: &mut dyn FnMut(&Sexp, &str) -> ParseResult<Vec<Design>>,
) -> ParseResult<BehaviourSpec> {
    let ("behaviour", parts) = s.expect_head("`(behaviour (bounds ...) (generators ...))`")? else {
        return Err(s.error("expected `(behaviour (bounds ...) (generators ...))`"));
    };
    let (mut bounds, mut generators) = (None, None);
    for part in parts {
        match part.head() {
            Some(("bounds", _)) if bounds.is_none() => bounds = Some(parse_bounds(part)?),
            Some(("generators", items)) if generators.is_none() => {
                let ds = parse_designs_with(items, load)?;
                if ds.is_empty() {
                    return Err(part.error("a behaviour needs at least one generator"));
                }
                generators = Some(ds);
            }
            _ => return Err(part.error("expected one `(bounds ...)` and one `(generators ...)`")),
        }
    }
    match (bounds, generators) {
        (Some(bounds), Some(generators)) => Ok(BehaviourSpec { bounds, generators }),
        _ => Err(s.error("a behaviour has `(bounds ...)` and `(generators ...)`")),
    }
}

/// The single behaviour of `src`; `(file ...)` generators are rejected.
pub fn parse_behaviour(src: &str) -> ParseResult<BehaviourSpec> {
    parse_behaviour_with(&sexp::parse_one(src)?, &mut |form, _| {
        Err(form.error("file references are not allowed here"))
    })
}

pub fn behaviour_to_sexp(spec: &BehaviourSpec) -> Sexp {
    Sexp::tagged(
        "behaviour",
        [bounds_to_sexp(&spec.bounds), Sexp::tagged("generators", spec.generators.iter().map(design_to_sexp))],
    )
}

pub fn behaviour_to_string(spec: &BehaviourSpec) -> String {
    sexp::pretty(&behaviour_to_sexp(spec), 78)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ludics::named::atomic_bomb;
    use crate::ludics::Address;

    #[test]
    fn round_trip() {
        let src = "(behaviour (bounds 2 () (0) (1) (0 1)) (generators (design (base (pos 0)) (pos 0 ()))))";
        let spec = parse_behaviour(src).unwrap();
        assert_eq!(spec.bounds, UniverseBounds::powerset(2, 1));
        assert_eq!(spec.generators, vec![atomic_bomb(&Address::new(&[0]))]);
        assert_eq!(parse_behaviour(&behaviour_to_string(&spec)).unwrap(), spec);
    }

    #[test]
    fn missing_parts_are_reported() {
        assert!(parse_behaviour("(behaviour (bounds 2 ()))").is_err());
        assert!(parse_behaviour("(behaviour (bounds 0 ()) (generators))").is_err());
        let e = parse_behaviour("(behaviour (bounds 2 ())\n  (generators))").unwrap_err();
        assert!(e.to_string().contains("2:"), "{e}");
    }
}
