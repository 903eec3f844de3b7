use thiserror::Error;

/// Errors produced by the scalar, matrix, Pfaffian and Cullis layers.
///
/// Every index carried by a variant is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {text:?} as {domain}: {reason}")]
    Parse {
        text: String,
        domain: &'static str,
        reason: &'static str,
    },

    #[error("division by zero")]
    DivisionByZero,

    #[error("{dividend} is not divisible by {divisor}")]
    InexactDivision { dividend: String, divisor: String },

    #[error("dimension mismatch: {op} of {left:?} and {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("matrix must have at least one row and one column, got {rows}x{cols}")]
    EmptyMatrix { rows: usize, cols: usize },

    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    RaggedRows {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("index set must be strictly increasing: {0:?}")]
    UnsortedIndices(Vec<usize>),

    #[error("matrix is not skew-symmetric with zero diagonal")]
    NotSkewSymmetric,

    #[error("operation needs an even dimension, got {0}")]
    OddDimension(usize),

    #[error("{0:?} is not a permutation of 1..={len}", len = .0.len())]
    InvalidPermutation(Vec<usize>),

    #[error("{mapping:?} is not an injection into 1..={ambient}")]
    InvalidInjection { mapping: Vec<usize>, ambient: usize },

    #[error("operation requires n >= k, got {rows}x{cols}")]
    TooFewRows { rows: usize, cols: usize },

    #[error("operation requires n > k, got {rows}x{cols}")]
    NotTall { rows: usize, cols: usize },

    #[error("{engine} needs a {required} scalar domain, {domain} is not one")]
    Unsupported {
        engine: &'static str,
        required: &'static str,
        domain: &'static str,
    },

    /// An exact division inside the fraction-free Pfaffian failed. This
    /// can only happen through an implementation bug.
    #[error("fraction-free Pfaffian broke down at step {step}: {source}")]
    FractionFreeBreakdown {
        step: usize,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
