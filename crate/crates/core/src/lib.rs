//! Exact computations with finite-dimensional Lie superalgebras given by
//! structure constants: validation, graded subspaces and quotients, the
//! Chevalley–Eilenberg complex in degrees up to three, Schur multipliers of
//! algebras and of pairs, closed-form bounds and their characterisations.
//!
//! Everything is generic over an exact [`Scalar`]; [`Rational`] is the
//! default and the aliases below fix it.

pub mod action;
pub mod algebra;
pub mod bounds;
pub mod catalog;
pub mod error;
pub mod exactla;
pub mod homology;
pub mod pairs;
pub mod random;
pub mod scalar;
pub mod subspace;
pub mod suite;

pub use action::{semidirect, ActionTable, Semidirect};
pub use algebra::{SuperAlgebra, ValidationReport, Violation};
pub use error::{Error, Result};
pub use exactla::Matrix;
pub use homology::{multiplier_dim, multiplier_report, MultiplierReport};
pub use pairs::{pair_multiplier_dim, pair_multiplier_report, PairPresentation};
pub use scalar::{Parity, Scalar};
pub use subspace::{GradedSubspace, Nilpotency, Quotient};

/// Arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;

pub type Algebra = SuperAlgebra<Rational>;
pub type Subspace = GradedSubspace<Rational>;
pub type RatMatrix = Matrix<Rational>;
pub type Pair = PairPresentation<Rational>;
