//! Text syntax for designs (`.dsn`) and cut-nets (`.net`).
//!
//! ```text
//! (design (base (pos 0))
//!   (pos 0 (1)
//!     (neg 0.1
//!       ((1) (daimon))
//!       ((3) (pos 0.1.3 ())))))
//! ```
//!
//! A premise of a positive rule defaults to the empty context and a branch
//! of a negative rule to the whole context of its conclusion; `(ctx (ADDR...)
//! BODY)` overrides the default.

use std::collections::BTreeSet;

use super::address::{Address, Pitchfork, Ramification};
use super::design::{Body, Design};
use crate::sexp::{self, ParseResult, Sexp};

pub fn parse_address(s: &Sexp) -> ParseResult<Address> {
    let a = s.expect_atom("an address")?;
    a.parse().map_err(|e: super::address::AddressParseError| s.error(e.to_string()))
}

fn parse_addresses(items: &[Sexp]) -> ParseResult<BTreeSet<Address>> {
    items.iter().map(parse_address).collect()
}

pub fn parse_ramification(s: &Sexp) -> ParseResult<Ramification> {
    s.expect_list("a ramification `(i ...)`")?.iter().map(sexp::parse_u32).collect()
}

pub(crate) fn ram_to_sexp(r: &Ramification) -> Sexp {
    Sexp::list(r.iter().map(|i| Sexp::atom(i.to_string())).collect())
}

fn addrs_to_sexp<'a>(a: impl IntoIterator<Item = &'a Address>) -> Sexp {
    Sexp::list(a.into_iter().map(|x| Sexp::atom(x.to_string())).collect())
}

pub fn parse_pitchfork(s: &Sexp) -> ParseResult<Pitchfork> {
    let (head, parts) = s.expect_head("`(base (neg ADDR) (pos ADDR...))`")?;
    if head != "base" {
        return Err(s.error(format!("expected `base`, found `{head}`")));
    }
    let mut base = Pitchfork::default();
    for part in parts {
        match part.expect_head("`(neg ...)` or `(pos ...)`")? {
            ("neg", []) => {}
            ("neg", [a]) => base.negative = Some(parse_address(a)?),
            ("neg", _) => return Err(part.error("a pitchfork has at most one negative address")),
            ("pos", addrs) => base.positive = parse_addresses(addrs)?,
            (other, _) => return Err(part.error(format!("unexpected `{other}` in base"))),
        }
    }
    Ok(base)
}

pub fn pitchfork_to_sexp(p: &Pitchfork) -> Sexp {
    let mut items = vec![Sexp::atom("base")];
    if let Some(n) = &p.negative {
        items.push(Sexp::tagged("neg", [Sexp::atom(n.to_string())]));
    }
    items.push(Sexp::tagged("pos", p.positive.iter().map(|a| Sexp::atom(a.to_string()))));
    Sexp::list(items)
}

pub fn parse_design(s: &Sexp) -> ParseResult<Design> {
    let (head, args) = s.expect_head("`(design (base ...) BODY)`")?;
    if head != "design" || args.len() != 2 {
        return Err(s.error("expected `(design (base ...) BODY)`"));
    }
    let base = parse_pitchfork(&args[0])?;
    parse_body(&args[1], base)
}

/// Splits an optional `(ctx (ADDR...) BODY)` wrapper.
fn unwrap_ctx(s: &Sexp) -> ParseResult<(Option<BTreeSet<Address>>, &Sexp)> {
    match s.head() {
        Some(("ctx", [addrs, body])) => Ok((Some(parse_addresses(addrs.expect_list("a context")?)?), body)),
        Some(("ctx", _)) => Err(s.error("`ctx` takes an address list and a body")),
        _ => Ok((None, s)),
    }
}

fn parse_body(s: &Sexp, base: Pitchfork) -> ParseResult<Design> {
    let (head, args) = s.expect_head("a design body")?;
    match head {
        "daimon" => Ok(Design::daimon(base)),
        "fid" => Ok(Design::fid(base)),
        "pos" => {
            let [focus, ram, kids @ ..] = args else {
                return Err(s.error("expected `(pos FOCUS (I...) PREMISE...)`"));
            };
            let focus = parse_address(focus)?;
            let ram = parse_ramification(ram)?;
            if kids.len() != ram.len() {
                return Err(s.error(format!("ramification {ram} needs {} premise(s), found {}", ram.len(), kids.len())));
            }
            let mut children = std::collections::BTreeMap::new();
            for (i, kid) in ram.iter().zip(kids) {
                let (ctx, inner) = unwrap_ctx(kid)?;
                let neg = match inner.head() {
                    Some(("neg", [a, ..])) => parse_address(a)?,
                    _ => focus.child(i),
                };
                let child_base = Pitchfork::negative(neg, ctx.unwrap_or_default());
                children.insert(i, parse_body(inner, child_base)?);
            }
            Ok(Design::positive(base, focus, children))
        }
        "neg" => {
            let [xi, branches @ ..] = args else {
                return Err(s.error("expected `(neg ADDR ((I...) BODY)...)`"));
            };
            let xi = parse_address(xi)?;
            if base.negative.as_ref() != Some(&xi) {
                return Err(s.error(format!("negative rule on {xi} does not match base `{base}`")));
            }
            let mut map = std::collections::BTreeMap::new();
            for b in branches {
                let (ram, body) = match b.as_list() {
                    Some([ram, body]) => (parse_ramification(ram)?, body),
                    _ => return Err(b.error("expected a branch `((I...) BODY)`")),
                };
                let (ctx, inner) = unwrap_ctx(body)?;
                let mut addrs = ctx.unwrap_or_else(|| base.positive.clone());
                addrs.extend(xi.star(&ram));
                if map.insert(ram.clone(), parse_body(inner, Pitchfork::positive(addrs))?).is_some() {
                    return Err(b.error(format!("duplicate branch {ram}")));
                }
            }
            Ok(Design::negative(base, map))
        }
        other => Err(s.error(format!("unknown design rule `{other}`"))),
    }
}

pub fn design_to_sexp(d: &Design) -> Sexp {
    Sexp::tagged("design", [pitchfork_to_sexp(&d.base), body_to_sexp(d)])
}

fn body_to_sexp(d: &Design) -> Sexp {
    match &d.body {
        Body::Daimon => Sexp::tagged("daimon", []),
        Body::Fid => Sexp::tagged("fid", []),
        Body::Positive { focus, children } => {
            let ram: Ramification = children.keys().copied().collect();
            let mut items = vec![Sexp::atom("pos"), Sexp::atom(focus.to_string()), ram_to_sexp(&ram)];
            for child in children.values() {
                let inner = body_to_sexp(child);
                items.push(if child.base.positive.is_empty() {
                    inner
                } else {
                    Sexp::tagged("ctx", [addrs_to_sexp(&child.base.positive), inner])
                });
            }
            Sexp::list(items)
        }
        Body::Negative { branches } => {
            let xi = d.base.negative.clone().unwrap_or_default();
            let mut items = vec![Sexp::atom("neg"), Sexp::atom(xi.to_string())];
            for (ram, b) in branches {
                let new = xi.star(ram);
                let ctx: BTreeSet<Address> = b.base.positive.difference(&new).cloned().collect();
                let inner = body_to_sexp(b);
                let body = if ctx == d.base.positive { inner } else { Sexp::tagged("ctx", [addrs_to_sexp(&ctx), inner]) };
                items.push(Sexp::list(vec![ram_to_sexp(ram), body]));
            }
            Sexp::list(items)
        }
    }
}

pub fn design_to_string(d: &Design) -> String {
    sexp::pretty(&design_to_sexp(d), 78)
}

/// Reads designs from top-level forms: `(design ...)`, `(net DESIGN...)`,
/// and `(file "path")`, the latter resolved by `load`.
pub fn parse_designs_with(
    forms: &[Sexp],
    load: &mut dyn FnMut(&Sexp, &str) -> ParseResult<Vec<Design>>,
) -> ParseResult<Vec<Design>> {
    let mut out = Vec::new();
    for form in forms {
        match form.head() {
            Some(("design", _)) => out.push(parse_design(form)?),
            Some(("net", items)) => out.extend(parse_designs_with(items, load)?),
            Some(("file", [path])) => out.extend(load(form, path.expect_atom("a file name")?)?),
            _ => return Err(form.error("expected `(design ...)`, `(net ...)` or `(file \"...\")`")),
        }
    }
    Ok(out)
}

/// Designs in `src`; `(file ...)` references are rejected.
pub fn parse_designs(src: &str) -> ParseResult<Vec<Design>> {
    let forms = sexp::parse_all(src)?;
    parse_designs_with(&forms, &mut |form, _| Err(form.error("file references are not allowed here")))
}

pub fn net_to_string(designs: &[Design]) -> String {
    let net = Sexp::tagged("net", designs.iter().map(design_to_sexp));
    sexp::pretty(&net, 78)
}
