use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A labeling, argument or partition does not belong to the framework at hand.
    #[error("domain error: {0}")]
    Domain(String),

    /// Enumeration would exceed the configured argument cap.
    #[error("size error: framework has {arguments} arguments, enumeration cap is {cap}")]
    Size { arguments: usize, cap: usize },

    #[error("arity error: {0}")]
    Arity(String),

    #[error("precondition error: {0}")]
    Precondition(String),

    /// A submitted ballot fails the configured semantics gate.
    #[error("ballot error: agent `{agent}` submitted a labeling that is not {semantics}")]
    Ballot { agent: String, semantics: String },

    #[error("config error: {0}")]
    Config(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("format error: {0}")]
    Format(String),
}

impl Error {
    /// Stable machine-readable kind, used by the CLI error envelope.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain-error",
            Error::Size { .. } => "size-error",
            Error::Arity(_) => "arity-error",
            Error::Precondition(_) => "precondition-error",
            Error::Ballot { .. } => "ballot-error",
            Error::Config(_) => "config-error",
            Error::Parse { .. } => "parse-error",
            Error::Format(_) => "format-error",
        }
    }

    pub fn line(&self) -> Option<usize> {
        match self {
            Error::Parse { line, .. } => Some(*line),
            _ => None,
        }
    }
}
