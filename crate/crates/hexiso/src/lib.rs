//! Combinatorics of the hexagonal (honeycomb) grid: perimeter measures,
//! row decomposition and bad-row elimination, exact isoperimetric bound
//! checkers, and brute-force search harnesses.

pub mod bounds;
pub mod cli;
pub mod hexgrid;
pub mod normalize;
pub mod perimeter;
pub mod search;

mod error;
pub(crate) mod mix;

pub use error::{Error, Result};
