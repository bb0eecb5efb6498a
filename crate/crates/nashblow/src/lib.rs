//! Exact decision procedures for the regularity of higher Nash blowups of
//! curve singularities.
//!
//! The library decides, for a curve branch with value semigroup S and each
//! order n, whether the n-th Nash blowup is regular — the criterion is
//! s_n - 1 ∈ S, where s_n is the (n+2)-nd smallest element of S — and backs
//! every verdict with independent certificates: an explicit first-order
//! deformation built from binomial linear systems, a kernel-based
//! deformation-space oracle, and finite checks of the positive-
//! characteristic counterexamples.
//!
//! All arithmetic is exact: rationals via arbitrary-precision integers, or
//! prime fields F_p. Nothing here uses floating point.

pub mod arith;
pub mod binom_matrix;
pub mod charp;
pub mod cli;
pub mod construction;
pub mod nash_curve;
pub mod semigroup;

pub use arith::{BivariatePoly, Coefficient, FieldTag, TruncatedSeries};
pub use construction::{AlgebraPresentation, ConstructionError};
pub use nash_curve::{is_regular, singular_indices, stabilization_index};
pub use semigroup::NumericalSemigroup;
