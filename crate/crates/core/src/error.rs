use std::path::PathBuf;
use thiserror::Error;

/// Error type shared by the whole crate.
///
/// The CLI maps these onto exit codes: domain errors (mismatched levels,
/// rings, bad inputs) are exit 2, precision/window exhaustion is exit 3.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("level mismatch: expected {expected}, found {found}")]
    LevelMismatch { expected: usize, found: usize },

    #[error("level {0} out of range (must satisfy {1})")]
    LevelOutOfRange(usize, &'static str),

    #[error("coefficient ring mismatch: {0}")]
    RingMismatch(String),

    #[error("precision mismatch: expected {expected}, found {found}")]
    PrecisionMismatch { expected: usize, found: usize },

    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),

    #[error("window exhausted: {0}")]
    WindowExhausted(String),

    #[error("cap exceeded: {what} = {value} over limit {limit}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("division by zero")]
    DivisionByZero,

    #[error("corrupt cache file {path}: {reason}")]
    CacheCorrupt { path: PathBuf, reason: String },

    #[error("cache io error at {path}: {source}")]
    CacheIo {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal exactness violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors that signal "the requested window/precision was not
    /// enough", as opposed to malformed input.
    pub fn is_exhaustion(&self) -> bool {
        matches!(
            self,
            Error::PrecisionExhausted(_) | Error::WindowExhausted(_) | Error::CapExceeded { .. }
        )
    }
}
