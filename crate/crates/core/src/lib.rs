//! Exact symbolic computation in the universal Racah algebra.
//!
//! The algebra is presented on the six letters `A, D, B, alpha, delta, beta`
//! with a fixed 15-rule reduction system whose normal forms are the PBW
//! monomials `A^i D^j B^k alpha^r delta^s beta^t`. Everything is computed
//! over exact rationals, so every identity check is bit-exact.
//!
//! The crate is organized in layers:
//!
//! * [`freealg`] — arithmetic in the free associative algebra on the six
//!   letters, with no relations applied.
//! * [`rewrite`] — the reduction system, normal-form computation, and the
//!   overlap-ambiguity (critical pair) checker.
//! * [`racah`] — named elements (C, gamma, the Casimirs), the presentation
//!   relation sets, and the dihedral group of (anti)automorphisms.
//! * [`analysis`] — filtration degrees, leading terms, and the exact linear
//!   algebra behind the degree-bounded center and independence checks.
//! * [`exprlang`] — a small expression language with a canonical printer,
//!   used by the command-line interface and golden tests.

pub mod analysis;
pub mod exprlang;
pub mod freealg;
pub mod racah;
pub mod rewrite;

pub use freealg::{
    anticommutator, commutator, linear_combine, ratio, scalar, ExponentTuple, Letter, NcPoly,
    Scalar, Word,
};
pub use racah::{Morphism, Name, Presentation, Racah, RacahError};
pub use rewrite::{AmbiguityReport, ReductionSystem, RewriteError, Strategy};
