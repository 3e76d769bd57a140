//! Error type shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised while building systems, solving curves, or optimizing quotes.
#[derive(Error, Debug)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dates must be strictly increasing and nonnegative: {0}")]
    InvalidDates(String),

    #[error("quote file parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid schedule for {label}: {msg}")]
    InvalidSchedule { label: String, msg: String },

    #[error("cashflow date {date} not on the system date grid")]
    DateNotOnGrid { date: f64 },

    #[error("kernel Gram matrix is not positive definite (near-duplicate dates?)")]
    IllConditionedKernel,

    #[error("pricing system is ill-conditioned; most collinear instruments: {first} / {second}")]
    IllConditionedSystem { first: String, second: String },

    #[error("redundant instrument {label}: its cashflows are replicated by the other instruments")]
    RedundantInstrument { label: String },

    #[error(
        "arbitrage-inconsistent prices: instrument {label} is replicable with price {replicated:.10} but quoted at {quoted:.10}"
    )]
    ArbitrageInconsistent {
        label: String,
        quoted: f64,
        replicated: f64,
    },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("discount factor is nonpositive at x = {x}: g = {value}")]
    NonpositiveDiscount { x: f64, value: f64 },

    #[error("infeasible constraints: {msg}")]
    Infeasible { msg: String },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("bootstrap chain ordering violated: {0}")]
    ChainOrder(String),

    #[error("reference curve does not cover horizon {horizon:.6} required by {label}")]
    MissingReferenceHorizon { label: String, horizon: f64 },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
