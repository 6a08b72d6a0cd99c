//! Theory-of-grounds terms, Ludics designs and their interaction,
//! behaviours, a translation of linear implicational terms into designs,
//! and focused proof search with games.

pub mod background;
pub mod behaviour;
pub mod focusing;
pub mod ground;
pub mod interaction;
pub mod ludics;
pub mod sexp;
pub mod translation;
