use thiserror::Error;

use crate::partition::Cell;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("malformed partition {0:?}: expected comma-separated weakly decreasing positive integers")]
    ParsePartition(String),
    #[error("malformed rational {0:?}: expected \"num/den\"")]
    ParseRational(String),
    #[error("cell {cell} is not a removable corner of {partition}")]
    NotRemovable { cell: Cell, partition: String },
    #[error("cell {cell} is not an addable cell of {partition}")]
    NotAddable { cell: Cell, partition: String },
    #[error("invalid box move: {0}")]
    InvalidMove(String),
    #[error("size mismatch: |{left}| = {left_size} but |{right}| = {right_size}")]
    SizeMismatch {
        left: String,
        left_size: usize,
        right: String,
        right_size: usize,
    },
    #[error("{inner} is not contained in {outer}: row {row} has {inner_len} > {outer_len} boxes")]
    NotContained {
        outer: String,
        inner: String,
        row: usize,
        inner_len: usize,
        outer_len: usize,
    },
    #[error("{what} = {value} exceeds the configured limit {limit}{hint}")]
    LimitExceeded {
        what: &'static str,
        value: u64,
        limit: u64,
        hint: &'static str,
    },
    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(usize, usize),
    #[error("total mass mismatch: {0} vs {1}")]
    MassMismatch(String, String),
    #[error("partition {partition} does not belong to level {level}")]
    WrongLevel { partition: String, level: usize },
    #[error("mass for {0} must be nonnegative")]
    NegativeMass(String),
    #[error("cannot project a measure on level {level} to level {target}")]
    BadProjection { level: usize, target: usize },
    #[error("N = {n_vars} is smaller than the length {length} of {partition}")]
    TooFewVariables {
        n_vars: usize,
        length: usize,
        partition: String,
    },
    #[error("evaluation points must be pairwise distinct (x[{0}] = x[{1}]); the symmetrization sum has a vanishing denominator")]
    RepeatedPoints(usize, usize),
    #[error("invalid Thoma parameters: {0}")]
    InvalidParams(String),
    #[error("{0}")]
    Hypothesis(String),
    #[error("state {0} has zero specialization value; it cannot be reached by the growth chain")]
    ZeroState(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("staircase diagram infeasible at k = {k}: {reason}")]
    Infeasible { k: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
