use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition `{input}`: {reason}")]
    InvalidPartition { input: String, reason: String },

    #[error("{what} = {value} out of range {lo}..={hi}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        lo: usize,
        hi: usize,
    },

    #[error("{0}")]
    Domain(String),

    #[error("{0} is not a supported prime (need an odd prime below 2^32)")]
    NotPrime(u64),

    #[error("matrix is not nilpotent")]
    NotNilpotent,

    #[error("rank profile {0:?} is not weakly decreasing")]
    BadRankProfile(Vec<usize>),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("pattern not nilpotent-generic: digraph has a cycle")]
    Cyclic,

    #[error("parameter ({x},{y},{k}) is not in the commutant pattern")]
    ParamNotInPattern { x: usize, y: usize, k: usize },

    #[error(
        "budget exceeded: exhaustive enumeration needs {required} assignments, budget is {budget}"
    )]
    BudgetExceeded { required: u128, budget: u64 },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
