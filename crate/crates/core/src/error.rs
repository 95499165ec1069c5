use thiserror::Error;

/// Errors raised by the exact and numeric layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error(
        "insufficient recurrence coefficients: need gamma up to index {needed}, got {available}"
    )]
    InsufficientGamma { needed: usize, available: usize },

    #[error("moment table too short: need index {needed}, table holds up to {available}")]
    TableTooShort { needed: usize, available: usize },

    #[error("determinant ratio at n = {n} is not rational")]
    NonRationalRatio { n: usize },

    #[error("Hankel determinant vanishes at n = {n}")]
    ZeroDeterminant { n: usize },

    #[error("Hankel determinant at n = {n} is not positive")]
    NotPositiveDefinite { n: usize },

    #[error("chain-sequence parameter g_{n} = {value} leaves (0, 1)")]
    ChainViolation { n: usize, value: String },

    #[error("recurrence hypothesis violated at gamma_{index}: {reason}")]
    HypothesisViolation { index: usize, reason: String },

    #[error("{what}: argument {value} outside the domain")]
    Domain { what: &'static str, value: String },

    #[error(
        "quadrature did not converge after {evaluations} evaluations (error estimate {estimate:e})"
    )]
    NonConvergence { evaluations: usize, estimate: f64 },

    #[error("weight support [{xi}, {eta}] is invalid: {reason}")]
    InvalidSupport {
        xi: String,
        eta: String,
        reason: &'static str,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
