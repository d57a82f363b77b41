use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} elements, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("labeling violates transitivity on elements ({0}, {1}, {2})")]
    Infeasible(usize, usize, usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("ground set of size {n} exceeds the oracle bound {bound}")]
    OracleBound { n: usize, bound: usize },
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("negative capacity {capacity} on arc {from} -> {to}")]
    NegativeCapacity { from: usize, to: usize, capacity: f64 },
    #[error("conflicting fixation: {0}")]
    Conflict(String),
    #[error("invalid dataset parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
