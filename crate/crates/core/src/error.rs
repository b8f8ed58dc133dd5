use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition has a non-positive part: {0:?}")]
    NonPositivePart(Vec<u32>),
    #[error("partition parts are not weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),
    #[error("cannot parse partition from {0:?}; expected e.g. [3,1] or []")]
    Syntax(String),

    #[error("character value undefined: |{nu}| != |{mu}|")]
    SizeMismatch { nu: Partition, mu: Partition },
    #[error("symmetric group degree {n} exceeds the configured maximum {max}")]
    ResourceLimit { n: u32, max: u32 },

    #[error("division by zero")]
    DivisionByZero,
    #[error("division by a scalar carrying u, a or b is not supported")]
    UnsupportedDivision,
    #[error("[0] is not a legal quantum integer")]
    ZeroQuantumInteger,
    #[error("evaluation hits a pole")]
    Pole,

    #[error("degree bound {got} does not match {expected}")]
    BoundMismatch { expected: u32, got: u32 },
    #[error("degree {degree} exceeds truncation bound {bound}")]
    DegreeExceeded { degree: u32, bound: u32 },
    #[error("beta_0 is not an operator")]
    ZeroBeta,

    #[error("cannot normalize: {0}")]
    Normalization(String),
    #[error("lambda expansion rejected: {0}")]
    LambdaExpansion(String),
}
