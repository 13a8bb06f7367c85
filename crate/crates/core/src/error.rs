use thiserror::Error;

/// Errors surfaced by instance generation, cost evaluation, and the CLI.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A family list, shape, or experiment configuration is inconsistent.
    #[error("configuration error: {0}")]
    Config(String),

    /// Input is well-formed but outside what the algorithm supports.
    #[error("unsupported input: {0}")]
    Unsupported(String),

    /// Malformed WCNF/CNF text.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
}
