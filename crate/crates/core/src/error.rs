use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("invalid layout: {0}")]
    InvalidLayout(String),

    #[error("invalid sparse layout: position {position} is used by vertices {first} and {second}")]
    InvalidSparseLayout {
        position: i64,
        first: usize,
        second: usize,
    },

    #[error("vertex {0} is not in the tree")]
    InvalidVertex(usize),

    #[error("pathwidth {pathwidth} exceeds the requested bound {bound}")]
    PathwidthExceeded { pathwidth: usize, bound: usize },

    #[error("not a caterpillar: vertex {0} has degree >= 3 but cannot lie on a common backbone")]
    NotACaterpillar(usize),

    #[error("instance too large for this oracle: {0}")]
    TooLarge(String),

    #[error("reduction instance has {total} vertices, budget is {budget}")]
    BudgetExceeded { total: BigUint, budget: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
