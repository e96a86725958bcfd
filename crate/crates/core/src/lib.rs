//! Analysis toolkit for valid utility games played under information-sharing
//! constraints.
//!
//! A game couples a weighted-coverage welfare function with per-agent action
//! sets and utilities, and a directed constraint graph that decides which
//! other agents each agent can observe; unobserved actions are treated as the
//! empty set. The crate computes the graph quantities that drive
//! price-of-anarchy bounds (information groups, independence numbers and
//! their LP relaxations, clique covers), enumerates pure Nash equilibria
//! under observation masking, and generates the tight worst-case instances
//! that show the bounds cannot be improved.
//!
//! All numeric work is generic over an exact scalar type (see [`Scalar`]);
//! the crate-level aliases [`BigRat`] and [`Rat64`] are the two
//! instantiations used in practice. Floating point is deliberately not
//! supported: bound comparisons and LP duality are certified as exact
//! rational equalities.

pub mod bits;
pub mod constructions;
mod error;
pub mod fileformat;
pub mod games;
pub mod graphs;
pub mod lp;
pub mod random;
pub mod scalar;
pub mod welfare;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Arbitrary-precision exact rational. Default scalar for graph analysis,
/// where simplex pivots can grow intermediate numerators.
pub type BigRat = num::BigRational;

/// Machine-word exact rational. Suited to randomized game sweeps where all
/// values stay tiny and speed matters.
pub type Rat64 = num::rational::Rational64;
