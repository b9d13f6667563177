//! Exact enumeration of binary necklaces, rotation classes of residue
//! subsets, and Lyndon words.
//!
//! Closed-form divisor sums (`counting`) are paired with a brute-force
//! enumeration oracle (`oracle`) so every count can be cross-checked
//! exactly. The `identities` module turns the underlying theorems into
//! executable grid verifiers, and `residue` provides the subset-of-Z_k
//! machinery everything operates on.

// divisibility and interval preconditions read better arithmetically
#![allow(clippy::manual_is_multiple_of, clippy::manual_range_contains)]

pub mod counting;
pub mod error;
pub mod identities;
pub mod numtheory;
pub mod oracle;
pub mod residue;

pub use error::{Error, Result};
pub use residue::{PeriodClass, PeriodDecomposition, ResidueSubset};
