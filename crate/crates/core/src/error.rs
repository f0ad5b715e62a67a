use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("ring with {requested} elements exceeds the size cap of {cap}")]
    SizeCap { requested: u128, cap: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("element {element} is not central")]
    NotCentral { element: usize },

    #[error("map is not a ring endomorphism: {0}")]
    NotEndomorphism(String),

    #[error("subset is not a two-sided ideal: {0}")]
    NotIdeal(String),

    #[error("element index {index} out of range for ring of size {size}")]
    ElementOutOfRange { index: usize, size: usize },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),

    #[error("unknown report format `{0}`")]
    UnknownFormat(String),
}

impl RingError {
    /// Process exit status for the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            RingError::Inconsistent(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T, E = RingError> = std::result::Result<T, E>;
