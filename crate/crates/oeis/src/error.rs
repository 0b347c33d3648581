use natmat_core::Nat;
use std::path::PathBuf;

#[derive(Debug)]
pub enum OeisError {
    /// Sequence identifiers are "A" followed by six digits.
    InvalidId { id: String },
    /// Cache-only lookup missed.
    NotCached { id: String, path: PathBuf },
    /// Network retrieval failed (HTTP status when the server answered).
    FetchFailed {
        id: String,
        status: Option<u16>,
        message: String,
    },
    /// A non-comment line was not two integer tokens in increasing-index
    /// order.
    MalformedLine { line_no: usize, content: String },
    /// The b-file ends before the requested bound.
    CoverageGap { covered_to: Option<Nat>, bound: u64 },
    Io(std::io::Error),
}

impl std::fmt::Display for OeisError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OeisError::InvalidId { id } => write!(f, "invalid sequence id {id:?}"),
            OeisError::NotCached { id, path } => {
                write!(f, "{id} not cached at {}", path.display())
            }
            OeisError::FetchFailed {
                id,
                status,
                message,
            } => match status {
                Some(code) => write!(f, "fetching {id} failed with HTTP {code}: {message}"),
                None => write!(f, "fetching {id} failed: {message}"),
            },
            OeisError::MalformedLine { line_no, content } => {
                write!(f, "malformed b-file line {line_no}: {content:?}")
            }
            OeisError::CoverageGap { covered_to, bound } => match covered_to {
                Some(v) => write!(f, "b-file covers values only up to {v}, below bound {bound}"),
                None => write!(f, "empty b-file cannot cover bound {bound}"),
            },
            OeisError::Io(e) => write!(f, "cache i/o error: {e}"),
        }
    }
}

impl std::error::Error for OeisError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            OeisError::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for OeisError {
    fn from(e: std::io::Error) -> Self {
        OeisError::Io(e)
    }
}
