use thiserror::Error;

use crate::index::MultiIndex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("dimension {0} is outside the supported range 0..={max}", max = crate::index::MAX_DIM)]
    UnsupportedDimension(usize),

    #[error("index {index} is outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("indices {0:?} are not strictly increasing")]
    NotIncreasing(Vec<usize>),

    #[error("expected degree {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("expected bidegree ({}, {}), found ({}, {})", expected.0, expected.1, found.0, found.1)]
    BidegreeMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },

    #[error("tensor is not symmetric: entry ({i}, {j}) differs from its transpose")]
    NotSymmetric { i: MultiIndex, j: MultiIndex },

    #[error("first Bianchi identity fails: Bianchi sum has coefficient {value} at ({i}, {j})")]
    BianchiViolation {
        i: MultiIndex,
        j: MultiIndex,
        value: String,
    },

    #[error("degree bound violated: {0}")]
    DegreeBound(String),

    #[error("invalid partition {parts:?}: weighted sum is {sum}, expected {expected}")]
    InvalidPartition {
        parts: Vec<usize>,
        sum: usize,
        expected: usize,
    },

    #[error("cannot add π-scalars with π powers {0} and {1}")]
    PiPowerMismatch(i32, i32),

    #[error("malformed model: {0}")]
    MalformedModel(String),

    #[error("parse error: {0}")]
    Parse(String),
}
