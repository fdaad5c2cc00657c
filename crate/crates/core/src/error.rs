use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{mu} is not contained in {lambda}")]
    NotContained { lambda: String, mu: String },
    #[error("degree {n} exceeds the configured limit {limit}")]
    DegreeLimit { n: usize, limit: usize },
    #[error("class function has non-integral multiplicity {0}")]
    NonIntegral(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("negative multiplicity for {0}")]
    NegativeMultiplicity(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
