use thiserror::Error;

/// Error type shared by every module in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    #[error("{name} = {value} violates constraint: {constraint}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },

    #[error("operation requires finite alpha")]
    InfiniteAlpha,

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("weights sum to {sum}, expected 1 within {tol}")]
    NotNormalized { sum: f64, tol: f64 },

    #[error("weight at index {index} is negative ({value})")]
    NegativeWeight { index: usize, value: f64 },

    #[error("weight at index {index} is zero; strict mode requires strictly positive weights")]
    ZeroWeight { index: usize },

    #[error("all weights are zero")]
    AllZero,

    #[error("input sequence is empty")]
    Empty,

    #[error("density supports do not overlap")]
    DisjointSupports,

    #[error("quadrature did not converge: last delta {last_delta} at {panels} panels")]
    QuadratureNotConverged { panels: usize, last_delta: f64 },

    #[error("invalid natural parameter: {0}")]
    InvalidNaturalParameter(String),

    #[error("outcome {value} is not in the family's outcome space")]
    InvalidOutcome { value: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
