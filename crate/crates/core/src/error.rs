use thiserror::Error;

/// Unified error type for the whole library.
///
/// Variants map onto the CLI process exit codes: `Validation` and `Domain`
/// exit with 3, `Budget` with 4, I/O and serialization problems with 4,
/// and argument-level misuse (handled by the argument parser itself) with 2.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: negative mass, row sums off, shape mismatches,
    /// unknown axis names, out-of-range parameters.
    #[error("validation: {0}")]
    Validation(String),

    /// Structurally valid input outside an operation's domain
    /// (e.g. interference gains with a² ≥ 1 where weakness is required).
    #[error("domain: {0}")]
    Domain(String),

    /// An exact computation would exceed its resource budget. The message
    /// spells out the arithmetic so the caller can see how far over it is.
    #[error("budget: {what} needs {needed} {unit}, budget is {budget} {unit}")]
    Budget {
        what: String,
        needed: u128,
        budget: u128,
        unit: &'static str,
    },

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
