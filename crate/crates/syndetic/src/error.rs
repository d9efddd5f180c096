//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An operation produced a vector outside the horizon. Never silently
    /// wrapped: a wraparound would fabricate false thickness certificates.
    #[error("window overflow: coordinate {coordinate} of {vector:?} exceeds horizon {horizon}")]
    WindowOverflow {
        vector: Vec<i64>,
        coordinate: i64,
        horizon: i64,
    },

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("element id {id} out of range for carrier of size {size}")]
    ElementOutOfRange { id: u64, size: u64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("{0} is not a subgroup: {1}")]
    NotSubgroup(String, String),

    #[error("order {order} exceeds the exact-arithmetic cap {cap}; use the iterative estimator")]
    ExactCapExceeded { order: u64, cap: u64 },

    #[error("certificate replay failed: {0}")]
    ReplayFailed(String),

    #[error("horizon too small: {0}")]
    HorizonTooSmall(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
