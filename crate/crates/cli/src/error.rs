use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{path}: {msg}")]
    Invalid { path: String, msg: String },
}

impl FormatError {
    pub(crate) fn at(path: impl Into<String>, msg: impl Into<String>) -> Self {
        FormatError::Invalid {
            path: path.into(),
            msg: msg.into(),
        }
    }
}

/// Errors that end a CLI run with exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Format(#[from] FormatError),
    #[error("{0}")]
    Core(#[from] twistcube_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}
