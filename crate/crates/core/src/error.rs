use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A parameter lies outside its permitted range.
    #[error("{field} out of range: {detail}")]
    OutOfRange { field: &'static str, detail: String },

    #[error("length mismatch for {what}: expected {expected}, got {actual}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        actual: usize,
    },

    #[error("{what} has length {len}, which is not a power of two")]
    NotPowerOfTwo { what: &'static str, len: usize },

    /// An exhaustive oracle was asked to enumerate more than it is allowed to.
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    /// Malformed or inconsistent configuration (config file, CLI flags, LLR file).
    #[error("{field}: {detail}")]
    Config { field: String, detail: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn config(field: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Config {
            field: field.into(),
            detail: detail.into(),
        }
    }

    /// True for errors caused by user input rather than by a failure at run time.
    pub fn is_config(&self) -> bool {
        matches!(
            self,
            Error::OutOfRange { .. }
                | Error::LengthMismatch { .. }
                | Error::NotPowerOfTwo { .. }
                | Error::Config { .. }
        )
    }
}
