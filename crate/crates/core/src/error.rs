//! Error type shared across the toolkit.

use crate::NodeId;

/// Errors produced by stream parsing, graph mutation, and evaluation.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A configuration value is outside its documented range.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// A text input could not be parsed.
    #[error("parse error at {path}:{line}: {reason}")]
    Parse {
        path: String,
        line: usize,
        reason: String,
    },

    /// An input stream or graph is empty where content is required.
    #[error("empty input: {0}")]
    EmptyInput(String),

    /// The sample graph is at capacity.
    #[error("sample graph capacity {capacity} exceeded")]
    CapacityExceeded { capacity: usize },

    /// A node was expected to be absent.
    #[error("node {0} already present")]
    DuplicateNode(NodeId),

    /// A node was expected to be present.
    #[error("node {0} not found")]
    MissingNode(NodeId),

    /// An edge endpoint is missing from the graph.
    #[error("edge endpoint {0} not in the sample graph")]
    MissingEndpoint(NodeId),

    /// The buffer is at capacity.
    #[error("buffer capacity {capacity} exceeded")]
    BufferFull { capacity: usize },

    /// A community id is not present in the partition.
    #[error("unknown community {0}")]
    UnknownCommunity(u64),

    /// Modularity is undefined on an edgeless graph.
    #[error("modularity undefined: graph has no edges")]
    NoEdges,

    /// Internal bookkeeping diverged from a from-scratch recount.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    /// Underlying I/O failure.
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(path: impl Into<String>, line: usize, reason: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            line,
            reason: reason.into(),
        }
    }
}
