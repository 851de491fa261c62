//! Arithmetic in the free associative algebra on the six primitive letters.
//!
//! No quotient relations are applied at this layer: `B * A` stays `BA`.
//! Reduction to normal form lives in [`crate::rewrite`].

mod poly;
mod scalar;
mod word;

pub use poly::{anticommutator, commutator, linear_combine, NcPoly};
pub use scalar::{ratio, scalar, Scalar};
pub use word::{ExponentTuple, Letter, Word};
