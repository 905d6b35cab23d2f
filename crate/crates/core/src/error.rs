use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division: dividend is not a multiple of the divisor")]
    InexactDivision,
    #[error("substitution hits a pole at variable `{0}`")]
    Pole(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("partition {inner} is not contained in {outer}")]
    Containment { inner: String, outer: String },
    #[error("partition {0} does not fit in the chain (box overflow)")]
    BoxOverflow(String),
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("sector overflow: cannot add a particle to a full chain of length {0}")]
    SectorOverflow(usize),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("values must be pairwise distinct: {0}")]
    NotDistinct(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
