use thiserror::Error;

use crate::gspec::GSpecIssue;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("chain size must be at least 1")]
    EmptyChain,

    #[error("chain size mismatch: expected {expected}, got {found}")]
    ChainMismatch { expected: usize, found: usize },

    #[error("element {value} out of range for chain of size {k}")]
    OutOfRange { value: usize, k: usize },

    #[error("extended value {doubled}/2 out of range for chain of size {k}")]
    ExtOutOfRange { doubled: u32, k: usize },

    #[error("word must contain at least one element")]
    EmptyWord,

    #[error("arity must be at least {min}, got {found}")]
    BadArity { min: usize, found: usize },

    #[error("invalid threshold spec: {}", format_issues(.0))]
    InvalidGSpec(Vec<GSpecIssue>),

    #[error("threshold function is not symmetric: {0}")]
    Asymmetric(String),

    #[error("tie-break choices are not symmetric at critical pair ({a}, {b})")]
    AsymmetricTies { a: usize, b: usize },

    #[error("table is not in the class: {0}")]
    NotInClass(String),

    #[error("element {0} is not a neutral element")]
    NotNeutral(usize),

    #[error("no neutral element")]
    NoNeutral,

    #[error("exhaustive check needs {count} evaluations, limit is {limit}")]
    GuardExceeded { count: u128, limit: u128 },

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("invariant violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

fn format_issues(issues: &[GSpecIssue]) -> String {
    issues
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
