//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors produced by constructors and solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A rational was requested with denominator zero.
    #[error("denominator is zero")]
    ZeroDenominator,

    /// A rational literal could not be parsed.
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),

    /// The matrix family parameter must satisfy n >= 1.
    #[error("matrix parameter n must be at least 1, got {0}")]
    InvalidParameter(u32),

    /// Band lengths do not match the stated order.
    #[error("band lengths inconsistent: order {order} needs {order} diagonal and {off} off-diagonal entries")]
    BandMismatch { order: usize, off: usize },

    /// A computation was rejected by its cost guard.
    #[error("{what} is limited to n <= {limit}, got {got}")]
    SizeGuard {
        what: &'static str,
        limit: u32,
        got: u32,
    },

    /// The eigenvector recurrence needs every superdiagonal entry nonzero.
    #[error("superdiagonal entry {index} is zero; eigenvector recurrence cannot advance")]
    ZeroSuperdiagonal { index: usize },

    /// Symmetrization needs positive products of opposite off-diagonal pairs.
    #[error("off-diagonal product at index {index} is not positive; matrix is not symmetrizable")]
    NotSymmetrizable { index: usize },

    /// Bisection tolerance must be positive.
    #[error("bisection tolerance must be positive, got {0}")]
    InvalidTolerance(f64),

    /// Banded elimination met a zero pivot before the final row.
    #[error("unexpected zero pivot in row {row} during banded elimination")]
    ZeroPivot { row: usize },

    /// A matrix family name other than `kac` or `bio` was requested.
    #[error("unknown matrix family `{0}`, expected `kac` or `bio`")]
    UnknownFamily(String),

    /// A range a..b with b < a was requested.
    #[error("range start {start} exceeds end {end}")]
    EmptyRange { start: u32, end: u32 },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
