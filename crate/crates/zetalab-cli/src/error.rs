//! Runner failures. Every variant maps to exit status 1; failed verdicts are
//! not errors.

/// Input, computation or IO failure.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Unparseable or inconsistent input.
    #[error("{0}")]
    Input(String),
    /// A library precondition or numerical failure.
    #[error(transparent)]
    Compute(#[from] zetalab::Error),
    /// Filesystem failure.
    #[error("{context}: {source}")]
    Io {
        /// What was being done.
        context: String,
        /// Underlying error.
        source: std::io::Error,
    },
    /// Two reports do not share a schema.
    #[error("schema mismatch: {0}")]
    Schema(String),
}

impl CliError {
    pub(crate) fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io { context: context.into(), source }
    }
}
