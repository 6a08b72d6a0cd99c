//! Indented tree rendering of designs, conclusion first.

use std::collections::BTreeSet;
use std::fmt::Write;

use super::address::Address;
use super::design::{Body, Design};

/// The rule label: `†`, `Ω`, `(⊢ξ, I)` or `(ξ ⊢, N)`.
pub fn rule_label(d: &Design) -> String {
    match &d.body {
        Body::Daimon => "†".into(),
        Body::Fid => "Ω".into(),
        Body::Positive { focus, .. } => format!("(⊢{focus}, {})", d.ramification().unwrap_or_default()),
        Body::Negative { branches } => {
            let xi = d.base.negative.clone().unwrap_or_default();
            if branches.is_empty() {
                format!("({xi} ⊢, ∅)")
            } else {
                let n: Vec<String> = branches.keys().map(|r| r.to_string()).collect();
                format!("({xi} ⊢, {{{}}})", n.join(", "))
            }
        }
    }
}

/// One line per node; addresses in `marked` are wrapped in `*`.
pub fn render_design(d: &Design, marked: &BTreeSet<Address>, indent: usize) -> String {
    let mut out = String::new();
    render_into(d, marked, indent, &mut out);
    out
}

fn render_into(d: &Design, marked: &BTreeSet<Address>, indent: usize, out: &mut String) {
    let _ = writeln!(out, "{}{}  {}", " ".repeat(indent), d.base.render(marked), rule_label(d));
    for p in d.premises() {
        render_into(p, marked, indent + 2, out);
    }
}
