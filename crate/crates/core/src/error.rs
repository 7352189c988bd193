use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A value table of dimension `n` would exceed the configured cap.
    #[error("dimension {n} exceeds the brute-force table cap of {max_n}")]
    ResourceLimit { n: usize, max_n: usize },

    #[error("table length {len} does not match 2^{n}")]
    LengthMismatch { n: usize, len: usize },

    #[error("non-finite value at index {index}")]
    NonFinite { index: usize },

    #[error("parameter a_{index} = {value} is outside (0, 1]")]
    ParamOutOfRange { index: usize, value: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
