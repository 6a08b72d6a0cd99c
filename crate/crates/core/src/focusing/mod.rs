//! Polarized formulas, focused search for clustered derivations, and the
//! games and strategies they amount to.

pub mod formula;
pub mod search;
pub mod strategy;
pub mod text;

pub use formula::{Formula, Polarity};
pub use search::{focused_search, is_axiom, Derivation, DerivationError, Rule, SearchConfig, SearchError, SearchOutcome};
pub use strategy::{
    check_game, derivation_to_strategy, strategy_to_derivation, Game, Move, Strategy, StrategyError,
};
