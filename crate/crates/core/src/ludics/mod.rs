//! Addresses, pitchforks and designs.

mod address;
mod design;
pub mod named;
mod order;
pub mod render;
pub mod text;

pub use address::{powerset, Address, AddressParseError, Pitchfork, Ramification};
pub use design::{Body, Design, DesignError};
pub use order::{is_subdesign, join, prune_positive_levels};
