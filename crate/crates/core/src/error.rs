use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed textual input; `offset` is the byte position of the fault.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    /// The request is well formed but exceeds a configured size cap.
    #[error("capability exceeded: {what} (cap {cap}, got {got})")]
    Capability { what: String, cap: usize, got: usize },

    /// A theorem-backed runtime check failed. For P5-related checks the
    /// witness, when one exists, is an induced P5 in the offending graph.
    #[error("invariant violated: {message}")]
    Invariant {
        message: String,
        p5: Option<[usize; 5]>,
    },

    #[error("search cancelled")]
    Cancelled,
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn cap(what: impl Into<String>, cap: usize, got: usize) -> Self {
        Error::Capability {
            what: what.into(),
            cap,
            got,
        }
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant {
            message: msg.into(),
            p5: None,
        }
    }
}
