use thiserror::Error;

/// Errors raised across the algebra, pairing and harness layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("negative argument {0} to a q-number function")]
    NegativeArgument(i64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("color {color} outside 1..={max}")]
    ColorOutOfRange { color: usize, max: usize },

    #[error("polynomial is not divisible by ({a} - {b})")]
    NonDivisible { a: String, b: String },

    #[error("substitution does not cover variable {0}")]
    PartialAssignment(String),

    #[error("monomial factors are not in the required order: {0}")]
    Unsorted(String),

    #[error("pole factor {0} has no matching numerator factor")]
    ExactCancellationFailure(String),

    #[error("expansion directions contain a cycle")]
    CyclicDirectionGraph,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("missing decomposition for {0}")]
    MissingDecomposition(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
