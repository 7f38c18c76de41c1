use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("graph order {n} outside supported range 1..={max}")]
    Order { n: usize, max: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed graph6 input: {0}")]
    Graph6(String),

    #[error("order {n} too large for {method} (limit {max})")]
    TooLarge {
        n: usize,
        max: usize,
        method: &'static str,
    },

    #[error("degree sequence is not sorted non-decreasing")]
    Unsorted,

    #[error("power iteration did not reach width {tol:e} after {iterations} iterations (width {width:e})")]
    NoConvergence {
        iterations: usize,
        tol: f64,
        width: f64,
    },

    #[error("no sign change in bisection bracket [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("negative radicand {0}")]
    NegativeRadicand(f64),

    #[error("scan of {patterns} labeled graphs needs the long-running flag")]
    Infeasible { patterns: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
