//! Clustered derivations and focused proof search.

use std::fmt::{self, Write};

use thiserror::Error;

use super::formula::Formula;

pub const DEFAULT_SEARCH_FUEL: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `⊢ A^⊥, A` for an atom `A`.
    Axiom,
    Daimon,
    /// One premise `⊢ N_i, Γ_i` per chosen subformula.
    Positive { focus: Formula, choices: Vec<Formula> },
    /// One premise `⊢ P_1 ... P_n, Γ` per branch.
    Negative { focus: Formula, branches: Vec<Vec<Formula>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Derivation {
    pub sequent: Vec<Formula>,
    pub rule: Rule,
    pub premises: Vec<Derivation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("at `{sequent}`: {message}")]
pub struct DerivationError {
    pub sequent: String,
    pub message: String,
}

pub fn show_sequent(seq: &[Formula]) -> String {
    let items: Vec<String> = seq.iter().map(|f| f.to_string()).collect();
    if items.is_empty() {
        "⊢".into()
    } else {
        format!("⊢ {}", items.join(", "))
    }
}

fn sorted(v: &[Formula]) -> Vec<Formula> {
    let mut v = v.to_vec();
    v.sort();
    v
}

/// `seq` without its first occurrence of `f`.
pub(crate) fn remove_one(seq: &[Formula], f: &Formula) -> Option<Vec<Formula>> {
    let k = seq.iter().position(|g| g == f)?;
    let mut rest = seq.to_vec();
    rest.remove(k);
    Some(rest)
}

pub fn is_axiom(seq: &[Formula]) -> bool {
    match seq {
        [Formula::PosAtom(a), Formula::NegAtom(b)] | [Formula::NegAtom(b), Formula::PosAtom(a)] => a == b,
        _ => false,
    }
}

/// Number of negative formulas, negative atoms included.
pub fn negative_count(seq: &[Formula]) -> usize {
    seq.iter().filter(|f| !f.is_positive()).count()
}

impl Derivation {
    pub fn leaf(sequent: Vec<Formula>, rule: Rule) -> Self {
        Derivation { sequent, rule, premises: Vec::new() }
    }

    /// Checks every step against the cluster schemas and the alternation of
    /// positive and negative clusters.
    pub fn validate(&self) -> Result<(), DerivationError> {
        let err = |message: String| DerivationError { sequent: show_sequent(&self.sequent), message };
        if negative_count(&self.sequent) > 1 {
            return Err(err("more than one negative formula".into()));
        }
        match &self.rule {
            Rule::Axiom if is_axiom(&self.sequent) && self.premises.is_empty() => {}
            Rule::Axiom => return Err(err("not an axiom".into())),
            Rule::Daimon if self.premises.is_empty() => {}
            Rule::Daimon => return Err(err("† has no premises".into())),
            Rule::Negative { focus, branches } => {
                let rest = remove_one(&self.sequent, focus).ok_or_else(|| err(format!("{focus} is not in the sequent")))?;
                if !focus.is_negative_compound() {
                    return Err(err(format!("{focus} is not a compound negative formula")));
                }
                if *branches != focus.negative_branches() || branches.len() != self.premises.len() {
                    return Err(err("branches differ from the decomposition of the focus".into()));
                }
                for (b, p) in branches.iter().zip(&self.premises) {
                    let expected: Vec<Formula> = b.iter().chain(&rest).cloned().collect();
                    if sorted(&expected) != sorted(&p.sequent) {
                        return Err(err(format!("premise `{}` does not match its branch", show_sequent(&p.sequent))));
                    }
                    if matches!(p.rule, Rule::Negative { .. }) {
                        return Err(err("a negative cluster above a negative cluster".into()));
                    }
                }
            }
            Rule::Positive { focus, choices } => {
                let mut rest =
                    remove_one(&self.sequent, focus).ok_or_else(|| err(format!("{focus} is not in the sequent")))?;
                if !focus.is_positive_compound() {
                    return Err(err(format!("{focus} is not a compound positive formula")));
                }
                if !focus.positive_alternatives().contains(choices) || choices.len() != self.premises.len() {
                    return Err(err("choices are not an alternative of the focus".into()));
                }
                for (c, p) in choices.iter().zip(&self.premises) {
                    let ctx = remove_one(&p.sequent, c)
                        .ok_or_else(|| err(format!("premise `{}` lacks {c}", show_sequent(&p.sequent))))?;
                    for f in &ctx {
                        rest = remove_one(&rest, f).ok_or_else(|| err(format!("{f} is not available to a premise")))?;
                    }
                    if matches!(p.rule, Rule::Positive { .. }) {
                        return Err(err("a positive cluster above a positive cluster".into()));
                    }
                }
                if !rest.is_empty() {
                    return Err(err("context formulas are dropped".into()));
                }
            }
        }
        self.premises.iter().try_for_each(Derivation::validate)
    }

    /// Conclusion first, premises indented.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(0, &mut out);
        out
    }

    fn render_into(&self, indent: usize, out: &mut String) {
        let label = match &self.rule {
            Rule::Axiom => "ax".to_owned(),
            Rule::Daimon => "†".to_owned(),
            Rule::Positive { focus, choices } => {
                let c: Vec<String> = choices.iter().map(|f| f.to_string()).collect();
                format!("+ {focus} {{{}}}", c.join(", "))
            }
            Rule::Negative { focus, branches } => {
                let b: Vec<String> = branches
                    .iter()
                    .map(|b| format!("{{{}}}", b.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(", ")))
                    .collect();
                format!("- {focus} {{{}}}", b.join(", "))
            }
        };
        let _ = writeln!(out, "{}{}    [{}]", " ".repeat(indent), show_sequent(&self.sequent), label);
        for p in &self.premises {
            p.render_into(indent + 2, out);
        }
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Bound on the number of sequents visited.
    pub fuel: usize,
    /// Close with `†` whatever cannot be proved.
    pub daimon: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { fuel: DEFAULT_SEARCH_FUEL, daimon: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Derivation),
    NotFound,
    FuelExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("`{0}` has more than one negative formula")]
    MultipleNegatives(String),
    #[error("`{0}` mixes polarities inside a cluster")]
    NotPolarized(String),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum After {
    Root,
    Positive,
    Negative,
}

struct OutOfFuel;

/// Ways to share `rest` among `k` premises, each formula going to exactly one.
pub(crate) fn splits(rest: &[Formula], k: usize) -> Vec<Vec<Vec<Formula>>> {
    if k == 0 {
        return if rest.is_empty() { vec![Vec::new()] } else { Vec::new() };
    }
    let total = k.pow(rest.len() as u32);
    (0..total)
        .map(|code| {
            let mut parts = vec![Vec::new(); k];
            let mut c = code;
            let mut digits = vec![0; rest.len()];
            for d in digits.iter_mut().rev() {
                *d = c % k;
                c /= k;
            }
            for (f, d) in rest.iter().zip(digits) {
                parts[d].push(f.clone());
            }
            parts
        })
        .collect()
}

fn search(seq: &[Formula], after: After, cfg: &SearchConfig, fuel: &mut usize) -> Result<Option<Derivation>, OutOfFuel> {
    if *fuel == 0 {
        return Err(OutOfFuel);
    }
    *fuel -= 1;
    if is_axiom(seq) {
        return Ok(Some(Derivation::leaf(seq.to_vec(), Rule::Axiom)));
    }
    if let Some(k) = seq.iter().position(Formula::is_negative_compound) {
        if after != After::Negative {
            let focus = seq[k].clone();
            let mut rest = seq.to_vec();
            rest.remove(k);
            let branches = focus.negative_branches();
            let mut premises = Vec::new();
            for b in &branches {
                let p: Vec<Formula> = b.iter().chain(&rest).cloned().collect();
                match search(&p, After::Negative, cfg, fuel)? {
                    Some(d) => premises.push(d),
                    None => break,
                }
            }
            if premises.len() == branches.len() {
                return Ok(Some(Derivation { sequent: seq.to_vec(), rule: Rule::Negative { focus, branches }, premises }));
            }
        }
    } else if after != After::Positive {
        for (k, focus) in seq.iter().enumerate().filter(|(_, f)| f.is_positive_compound()) {
            let mut rest = seq.to_vec();
            rest.remove(k);
            for choices in focus.positive_alternatives() {
                'split: for parts in splits(&rest, choices.len()) {
                    let mut premises = Vec::new();
                    for (c, ctx) in choices.iter().zip(parts) {
                        let p: Vec<Formula> = std::iter::once(c.clone()).chain(ctx).collect();
                        if negative_count(&p) > 1 {
                            continue 'split;
                        }
                        match search(&p, After::Positive, cfg, fuel)? {
                            Some(d) => premises.push(d),
                            None => continue 'split,
                        }
                    }
                    let rule = Rule::Positive { focus: focus.clone(), choices: choices.clone() };
                    return Ok(Some(Derivation { sequent: seq.to_vec(), rule, premises }));
                }
            }
        }
    }
    Ok(cfg.daimon.then(|| Derivation::leaf(seq.to_vec(), Rule::Daimon)))
}

/// Two-phase search: a compound negative formula is decomposed first;
/// otherwise the leftmost positive formula that works is focused on, trying
/// its alternatives and context splits in order. Clusters alternate.
/// With `daimon`, a †-free derivation is still preferred when one exists.
pub fn focused_search(sequent: &[Formula], cfg: SearchConfig) -> Result<SearchOutcome, SearchError> {
    if negative_count(sequent) > 1 {
        return Err(SearchError::MultipleNegatives(show_sequent(sequent)));
    }
    if let Some(f) = sequent.iter().find(|f| !f.is_polarized()) {
        return Err(SearchError::NotPolarized(f.to_string()));
    }
    let mut fuel = cfg.fuel;
    let strict = SearchConfig { daimon: false, ..cfg };
    let found = match search(sequent, After::Root, &strict, &mut fuel) {
        Ok(None) if cfg.daimon => search(sequent, After::Root, &cfg, &mut fuel),
        other => other,
    };
    Ok(match found {
        Err(OutOfFuel) => SearchOutcome::FuelExhausted,
        Ok(Some(d)) => SearchOutcome::Found(d),
        Ok(None) => SearchOutcome::NotFound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use Formula as F;

    #[test]
    fn lone_positive_atom_is_unprovable() {
        assert_eq!(focused_search(&[F::pos("P")], SearchConfig::default()), Ok(SearchOutcome::NotFound));
        let with_daimon = SearchConfig { daimon: true, ..SearchConfig::default() };
        assert_eq!(
            focused_search(&[F::pos("P")], with_daimon),
            Ok(SearchOutcome::Found(Derivation::leaf(vec![F::pos("P")], Rule::Daimon)))
        );
    }

    #[test]
    fn two_negatives_are_rejected() {
        assert!(focused_search(&[F::neg("A"), F::neg("B")], SearchConfig::default()).is_err());
        let mixed = F::par(F::neg("A"), F::neg("A"));
        assert_eq!(focused_search(&[mixed], SearchConfig::default()), Err(SearchError::NotPolarized("A^⊥ ⅋ A^⊥".into())));
    }

    #[test]
    fn splits_cover_all_assignments() {
        let rest = [F::pos("A"), F::pos("B")];
        let s = splits(&rest, 2);
        assert_eq!(s.len(), 4);
        assert_eq!(s[1], vec![vec![F::pos("A")], vec![F::pos("B")]]);
        assert!(splits(&rest, 0).is_empty());
    }

    #[test]
    fn tensor_of_axioms() {
        let seq = [F::tensor(F::neg("A"), F::neg("B")), F::pos("A"), F::pos("B")];
        let SearchOutcome::Found(d) = focused_search(&seq, SearchConfig::default()).unwrap() else { panic!() };
        d.validate().unwrap();
        assert_eq!(d.premises.len(), 2);
        assert!(d.premises.iter().all(|p| p.rule == Rule::Axiom));
    }
}
