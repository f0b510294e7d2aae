use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    /// A precondition or postcondition of an operation did not hold.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("malformed input: {0}")]
    Format(String),

    /// An exhaustive enumeration would exceed its configured bound.
    #[error("capacity exceeded: {what} is {requested}, bound is {bound}")]
    Capacity {
        what: &'static str,
        requested: usize,
        bound: usize,
    },

    /// A closed formula produced a non-integral or negative value.
    #[error("inexact evaluation of {formula}: {detail}")]
    Inexact {
        formula: &'static str,
        detail: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
