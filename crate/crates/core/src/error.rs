use thiserror::Error;

/// Errors produced by tableau construction, the enumeration engines and the
/// sweep harness. Cell coordinates are 1-based `(row, column)`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letters must be positive integers, found {0}")]
    InvalidLetter(u64),

    #[error("could not parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("parts must be positive and weakly decreasing: {0:?}")]
    InvalidPartition(Vec<usize>),

    #[error("row {row} is not weakly increasing at column {col}")]
    RowNotWeaklyIncreasing { row: usize, col: usize },

    #[error("column {col} is not strictly increasing at row {row}")]
    ColumnNotStrictlyIncreasing { row: usize, col: usize },

    #[error("row {row} is empty or longer than the row above it")]
    BadShape { row: usize },

    #[error("inner shape does not fit inside the outer shape at row {row}")]
    InnerNotContained { row: usize },

    #[error("insertion and recording tableaux have different shapes")]
    ShapeMismatch,

    #[error("recording tableau is not standard")]
    QNotStandard,

    #[error("cell ({row},{col}) is not an inner corner with a filled neighbour")]
    NotAnInnerCorner { row: usize, col: usize },

    #[error("input of size {size} exceeds the bound {bound}")]
    BoundExceeded { size: usize, bound: usize },

    #[error("enumeration needs {needed} words but the budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("tableau has entry {max} larger than m = {m}")]
    MaxEntryExceedsM { max: u32, m: u32 },

    #[error("{0} is not one of the supported families (a^k, 12, k...1)")]
    UnsupportedFamily(String),

    #[error("length {n} is below the {r} constrained rows of the family")]
    LengthBelowFamily { n: usize, r: usize },

    #[error("interpolated polynomial predicts {predicted} at m = {m} but the count is {actual}")]
    ValidationFailed {
        m: u32,
        predicted: String,
        actual: String,
    },

    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
