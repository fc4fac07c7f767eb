use thiserror::Error;

use crate::multidegree::Multidegree;

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("monomial orders do not match")]
    OrderMismatch,
    #[error("expected {expected} variables, got {got}")]
    VariableCount { expected: usize, got: usize },
    #[error("too many variables: {0} (at most {max})", max = crate::monomial::MAX_VARS)]
    TooManyVariables(usize),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: Multidegree, got: Multidegree },
    #[error("free module rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("not a chain complex: d_{index} * d_{next} != 0", next = index + 1)]
    NotAComplex { index: usize },
    #[error("submodule is not contained in the ambient span")]
    NotContained,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("local cohomology H^{index} in degree {twist} did not stabilize by t = {t_max}")]
    NotStabilized { index: usize, twist: Multidegree, t_max: usize },
    #[error("curve meets the base locus of the projection")]
    BaseLocus,
    #[error("retries exhausted: {0}")]
    RetriesExhausted(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl AlgebraError {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        AlgebraError::InvalidArgument(msg.into())
    }
}
