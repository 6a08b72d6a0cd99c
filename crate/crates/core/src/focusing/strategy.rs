//! Games and strategies read off clustered derivations, and back.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use super::formula::Formula;
use super::search::{is_axiom, negative_count, remove_one, show_sequent, splits, Derivation, Rule};

/// A focus with the subformulas it chooses.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move {
    pub focus: Formula,
    pub choices: Vec<Formula>,
}

impl Move {
    pub fn new(focus: Formula, choices: Vec<Formula>) -> Self {
        Move { focus, choices }
    }

    pub fn is_positive(&self) -> bool {
        self.focus.is_positive()
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.choices.iter().map(|x| x.to_string()).collect();
        write!(f, "({}, {{{}}})", self.focus, c.join(", "))
    }
}

pub type Game = Vec<Move>;

pub fn show_game(g: &[Move]) -> String {
    g.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", ")
}

/// The three conditions on games; the first negative move may have any focus.
pub fn check_game(g: &[Move]) -> Result<(), String> {
    if g.is_empty() {
        return Err("a game has at least one move".into());
    }
    for (k, pair) in g.windows(2).enumerate() {
        let (prev, next) = (&pair[0], &pair[1]);
        if prev.is_positive() == next.is_positive() {
            return Err(format!("moves {} and {} have the same polarity", k + 1, k + 2));
        }
        if !next.is_positive() && !prev.choices.contains(&next.focus) {
            return Err(format!("move {} focuses on {}, not a choice of the move before", k + 2, next.focus));
        }
    }
    let mut seen = BTreeSet::new();
    for m in g {
        if !seen.insert(&m.focus) {
            return Err(format!("focus {} is used twice", m.focus));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strategy {
    pub sequent: Vec<Formula>,
    pub games: BTreeSet<Game>,
}

impl Strategy {
    /// Adds every nonempty prefix of every game.
    pub fn prefix_closure(sequent: Vec<Formula>, games: impl IntoIterator<Item = Game>) -> Self {
        let mut all = BTreeSet::new();
        for g in games {
            for n in 1..=g.len() {
                all.insert(g[..n].to_vec());
            }
        }
        Strategy { sequent, games: all }
    }

    pub fn is_prefix_closed(&self) -> bool {
        self.games.iter().all(|g| (1..g.len()).all(|n| self.games.contains(&g[..n])))
    }

    /// Games that are not a proper prefix of another.
    pub fn maximal_games(&self) -> Vec<&Game> {
        self.games
            .iter()
            .filter(|g| !self.games.iter().any(|h| h.len() > g.len() && h.starts_with(g)))
            .collect()
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "strategy on {}", show_sequent(&self.sequent))?;
        for g in &self.games {
            writeln!(f, "  {}", show_game(g))?;
        }
        Ok(())
    }
}

fn paths(d: &Derivation) -> Vec<Game> {
    match &d.rule {
        Rule::Axiom | Rule::Daimon => vec![Vec::new()],
        Rule::Negative { focus, branches } => branches
            .iter()
            .zip(&d.premises)
            .flat_map(|(b, p)| {
                let m = Move::new(focus.clone(), b.clone());
                paths(p).into_iter().map(move |rest| std::iter::once(m.clone()).chain(rest).collect())
            })
            .collect(),
        Rule::Positive { focus, choices } => {
            let m = Move::new(focus.clone(), choices.clone());
            d.premises
                .iter()
                .flat_map(|p| paths(p).into_iter().map(|rest| std::iter::once(m.clone()).chain(rest).collect()))
                .collect()
        }
    }
}

/// One game per branch of the derivation, each cluster a move.
pub fn derivation_to_strategy(d: &Derivation) -> Strategy {
    Strategy::prefix_closure(d.sequent.clone(), paths(d).into_iter().filter(|g| !g.is_empty()))
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum StrategyError {
    #[error("the strategy has no games")]
    Empty,
    #[error("the strategy is not prefix-closed")]
    NotPrefixClosed,
    #[error("conflict at `{sequent}`: {message}")]
    Conflict { sequent: String, message: String },
}

fn conflict(seq: &[Formula], message: impl Into<String>) -> StrategyError {
    StrategyError::Conflict { sequent: show_sequent(seq), message: message.into() }
}

/// Rebuilds the derivation of `seq` whose games continue with `tails`.
fn rebuild(seq: &[Formula], tails: &[&[Move]], daimon: bool) -> Result<Derivation, StrategyError> {
    let firsts: BTreeSet<&Move> = tails.iter().filter_map(|t| t.first()).collect();
    let Some(first) = firsts.iter().next() else {
        return if is_axiom(seq) {
            Ok(Derivation::leaf(seq.to_vec(), Rule::Axiom))
        } else if daimon {
            Ok(Derivation::leaf(seq.to_vec(), Rule::Daimon))
        } else {
            Err(conflict(seq, "no move and no axiom"))
        };
    };
    let focus = &first.focus;
    if firsts.iter().any(|m| &m.focus != focus) {
        return Err(conflict(seq, "moves on different foci at the same point"));
    }
    let rest = remove_one(seq, focus).ok_or_else(|| conflict(seq, format!("{focus} is not in the sequent")))?;
    let after = |m: &Move| -> Vec<&[Move]> {
        tails.iter().filter(|t| t.first() == Some(m)).map(|t| &t[1..]).collect()
    };
    if !focus.is_positive() {
        let branches = focus.negative_branches();
        for m in &firsts {
            if !branches.contains(&m.choices) {
                return Err(conflict(seq, format!("{m} is not a branch of {focus}")));
            }
        }
        let mut premises = Vec::new();
        for b in &branches {
            let m = Move::new(focus.clone(), b.clone());
            if !firsts.contains(&m) {
                return Err(conflict(seq, format!("no game plays the branch {m}")));
            }
            let p: Vec<Formula> = b.iter().chain(&rest).cloned().collect();
            premises.push(rebuild(&p, &after(&m), daimon)?);
        }
        return Ok(Derivation { sequent: seq.to_vec(), rule: Rule::Negative { focus: focus.clone(), branches }, premises });
    }
    if firsts.len() > 1 {
        return Err(conflict(seq, format!("two positive moves on {focus}")));
    }
    let m = (*first).clone();
    if !focus.positive_alternatives().contains(&m.choices) {
        return Err(conflict(seq, format!("{m} is not an alternative of {focus}")));
    }
    let next = after(&m);
    let mut last = None;
    for parts in splits(&rest, m.choices.len()) {
        if m.choices.iter().zip(&parts).any(|(c, ctx)| negative_count(std::slice::from_ref(c)) + negative_count(ctx) > 1) {
            continue;
        }
        let attempt = m
            .choices
            .iter()
            .zip(parts)
            .map(|(c, ctx)| {
                let p: Vec<Formula> = std::iter::once(c.clone()).chain(ctx).collect();
                let mine: Vec<&[Move]> = next.iter().filter(|t| t.first().is_none_or(|n| &n.focus == c)).copied().collect();
                rebuild(&p, &mine, daimon)
            })
            .collect::<Result<Vec<_>, _>>();
        match attempt {
            Ok(premises) => {
                let rule = Rule::Positive { focus: m.focus.clone(), choices: m.choices.clone() };
                return Ok(Derivation { sequent: seq.to_vec(), rule, premises });
            }
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap_or_else(|| conflict(seq, "no way to share the context")))
}

/// Merges games sharing prefixes back into clusters. Leaves without moves
/// are axioms when possible, `†` otherwise.
pub fn strategy_to_derivation(s: &Strategy) -> Result<Derivation, StrategyError> {
    if s.games.is_empty() {
        return Err(StrategyError::Empty);
    }
    if !s.is_prefix_closed() {
        return Err(StrategyError::NotPrefixClosed);
    }
    let tails: Vec<&[Move]> = s.maximal_games().into_iter().map(|g| g.as_slice()).collect();
    let d = rebuild(&s.sequent, &tails, false).or_else(|_| rebuild(&s.sequent, &tails, true))?;
    d.validate().map_err(|e| conflict(&s.sequent, e.to_string()))?;
    Ok(d)
}
