//! Finite categories, dimension-truncated simplicial sets, cosimplicial
//! resolutions and homotopy colimits, with an integral homology oracle for
//! weak-equivalence checks.

pub mod budget;
pub mod cosimp;
pub mod diagcat;
pub mod error;
pub mod ops;
pub mod fincat;
pub mod fixtures;
pub mod hocolim;
pub mod homology;
pub mod sset;
pub mod text;
pub mod unionfind;

pub use budget::Budget;
pub use error::{Error, Result};
