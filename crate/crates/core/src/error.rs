use thiserror::Error;

/// Errors raised by the min-plus toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("epsilon has no ⊗-inverse")]
    EpsilonInverse,

    #[error("dimension mismatch: {left}x{left} vs {right}x{right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix must be square with at least one row: {0}")]
    NotSquare(String),

    #[error("polynomial is not monic: leading coefficient is {0}, expected 0")]
    NotMonic(String),

    #[error("polynomial must have at least one coefficient")]
    EmptyPolynomial,

    #[error("{what} limit exceeded: n = {n} is above the cap of {cap}{hint}")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
        hint: &'static str,
    },

    #[error("circuit enumeration stopped after {found} circuits (cap {cap})")]
    CircuitCapExceeded { found: usize, cap: usize },

    #[error("invalid network: {0}")]
    InvalidNetwork(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    /// True for the errors that come from a configured size limit.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. } | Error::CircuitCapExceeded { .. })
    }

    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
