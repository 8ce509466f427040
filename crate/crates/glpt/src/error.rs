use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// graph6/sparse6 decoding failure; `offset` is the byte position in the
    /// input line where decoding went wrong.
    #[error("codec error at byte {offset}: {reason}")]
    Codec { offset: usize, reason: String },

    /// A precondition of an operation was violated (disconnected input,
    /// out-of-range vertex, overlapping sets, bad construction parameters...).
    #[error("domain error: {0}")]
    Domain(String),

    /// An exact enumeration exceeded its configured result cap.
    #[error("enumeration cap exceeded: more than {cap} longest paths")]
    EnumerationCap { cap: usize },

    /// An augmentation plan did not apply cleanly to its host path.
    #[error("plan integrity error: {0}")]
    PlanIntegrity(String),

    /// I/O error while reading a corpus file.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    /// A corpus line failed to parse; wraps the underlying codec error.
    #[error("line {line}: {source}")]
    CorpusLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn codec(offset: usize, reason: impl Into<String>) -> Self {
        Error::Codec {
            offset,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
