use crate::exact::ExactRational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// The index lies outside the range where the operation is defined.
    #[error("{operation} requires n >= {min}, got n = {n}")]
    Domain {
        operation: &'static str,
        min: u64,
        n: u64,
    },

    #[error("pole at t = {0}")]
    Pole(ExactRational),

    #[error("division by zero {0}")]
    DivisionByZero(&'static str),

    #[error("precision too low: {0}")]
    PrecisionTooLow(String),

    #[error("no convergence: {0}")]
    NonConvergence(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn domain(operation: &'static str, min: u64, n: u64) -> Self {
        Error::Domain { operation, min, n }
    }
}
