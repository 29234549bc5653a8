//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{what} is {actual}, exceeding the cap of {cap}")]
    TooLarge {
        what: &'static str,
        actual: usize,
        cap: usize,
    },

    #[error("exact division failed: remainder is nonzero")]
    NotDivisible,

    #[error("root solver did not converge at {precision_bits} bits")]
    SolverFailure {
        precision_bits: u32,
        partial: Box<crate::rootfind::RootSet>,
    },

    #[error("target must satisfy 0 < |z0| < 1")]
    InvalidTarget,

    #[error("n = {n} is too small: it yields cycle length m = {m} < 3")]
    NTooSmall { n: u32, m: u64 },

    #[error("no certificate found for n up to {n_max}")]
    NotFound { n_max: u32 },

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
