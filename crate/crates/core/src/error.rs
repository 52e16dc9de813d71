use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The requested computation is outside the range where the method says anything.
    #[error("method inapplicable: {0}")]
    MethodInapplicable(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("degenerate bilinear form: rank {rank} < {dim}")]
    DegenerateForm { rank: usize, dim: usize },

    #[error("subspace is not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("algebra is not commutative: b{0}*b{1} != b{1}*b{0}")]
    NotCommutative(usize, usize),

    #[error("algebra table validation failed: {0}")]
    Validation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("no splitting field found up to degree {0}")]
    SplittingFailure(u32),

    #[error("sylow search failed: {0}")]
    SearchFailure(String),

    /// The identity is not asserted outside its stated range.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An internal consistency check failed. Always a bug or a falsified claim.
    #[error("assertion failed: {0}")]
    Assertion(String),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err($crate::error::Error::Assertion(format!($($arg)+)));
        }
    };
}
pub(crate) use ensure;
