use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("k must be at least {min}, got {k}")]
    InvalidK { k: usize, min: usize },

    #[error("denominator constant term must be nonzero")]
    ZeroDenominatorConstant,

    #[error("series extraction requires a denominator constant term of 1 or -1, got {found}")]
    NonUnitDenominator { found: String },

    #[error("coefficient lists differ in length: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("rank {index} out of range for a class of {count} strings")]
    RankOutOfRange { index: String, count: String },

    #[error("{string:?} is not a member of the requested class")]
    NotInClass { string: String },

    #[error("matrix dimensions differ: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid parameters: {reason}")]
    InvalidParams { reason: String },

    #[error("expected {expected} middle-row selections, got {got}")]
    SelectionShape { expected: usize, got: usize },

    #[error("duplicate matrices at indices {first} and {second}")]
    DuplicateMatrices { first: usize, second: usize },

    #[error("search needs {needed} window comparisons, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
}

impl Error {
    pub(crate) fn params(reason: impl Into<String>) -> Self {
        Error::InvalidParams {
            reason: reason.into(),
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
