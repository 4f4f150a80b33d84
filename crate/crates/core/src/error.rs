use std::path::PathBuf;

use thiserror::Error;

use crate::decomp::Violation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("vertex {vertex} listed twice")]
    DuplicateVertex { vertex: usize },
    #[error("clique size must be at least 1")]
    InvalidCliqueSize,
    #[error("missing `p edge` header line")]
    MissingHeader,
    #[error("line {line}: second `p` header line")]
    DuplicateHeader { line: usize },
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCountMismatch { declared: usize, found: usize },
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Graph {
        path: PathBuf,
        #[source]
        source: GraphError,
    },
    #[error(transparent)]
    InvalidInput(#[from] GraphError),
    #[error("invalid tree decomposition: {0}")]
    TreeDecomposition(#[from] Violation),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("unknown kernel `{0}` (expected degeneracy, oct, dbd, chordal or loc)")]
    UnknownKernel(String),
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("corpus manifest: {0}")]
    Manifest(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl PipelineError {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        PipelineError::Io {
            path: path.into(),
            source,
        }
    }
}
