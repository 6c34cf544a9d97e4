use thiserror::Error;

use crate::family::FamilyId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    /// An exact division left a remainder. This is the integrity alarm for a
    /// wrong recurrence or a wrong input sequence.
    #[error("inexact division in {context} at degree {degree}: {numerator} / {divisor}")]
    InexactDivision {
        context: &'static str,
        degree: usize,
        numerator: String,
        divisor: String,
    },

    #[error("cycle index has no argument for t_{0}")]
    MissingArgument(usize),

    #[error("invalid cycle index: {0}")]
    InvalidCycleIndex(String),

    #[error("expression contains a {found} node; only {allowed} allowed")]
    UnsupportedNode {
        found: &'static str,
        allowed: &'static str,
    },

    #[error("enumeration of {family} at N={n} refused: limit is N<={limit}")]
    BudgetExceeded {
        family: FamilyId,
        n: usize,
        limit: usize,
    },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("factor index {index} out of range for an expression with {factors} factors")]
    InvalidFactorIndex { index: usize, factors: usize },

    #[error("family {0} does not support this operation")]
    UnsupportedFamily(FamilyId),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
