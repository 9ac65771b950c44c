use thiserror::Error;

/// Errors raised by the calculus, series and embedding modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A cost guard refused the computation.
    #[error("resource guard: {0}")]
    Resource(String),
    /// An input string or file could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    /// A computation reached a state its own invariants rule out.
    #[error("internal error: {0}")]
    Internal(String),
    /// Failure inside a named stage of a multi-stage pipeline.
    #[error("stage `{stage}` failed: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub(crate) fn in_stage(self, stage: &'static str) -> Self {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }

    /// Stable machine-readable code, used by the command-line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Resource(_) => "resource",
            Error::Parse(_) => "parse",
            Error::Internal(_) => "internal",
            Error::Stage { source, .. } => source.code(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
