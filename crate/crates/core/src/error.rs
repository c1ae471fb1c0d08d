use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("conflicting brackets for basis pair ({left}, {right})")]
    BracketConflict { left: String, right: String },

    #[error("basis index {0} out of range")]
    IndexOutOfRange(usize),

    #[error("subspaces belong to algebras of different shape")]
    MixedAlgebra,

    #[error("vector is not homogeneous")]
    NonHomogeneous,

    #[error("subspace is not a graded ideal")]
    NotAnIdeal,

    #[error("subspace is not a subalgebra")]
    NotASubalgebra,

    #[error("action violates the action axioms")]
    InvalidAction,

    #[error("unsupported pair: {0}")]
    UnsupportedPair(String),

    #[error("parameters outside the family: {0}")]
    OutOfFamily(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
