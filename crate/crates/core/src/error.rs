use thiserror::Error;

/// Errors produced by graph construction, parsing and the solvers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate vertex {0} in sequence")]
    DuplicateVertex(usize),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("graph of order {n} exceeds the supported range ({max})")]
    OrderTooLarge { n: usize, max: usize },
    #[error("graph has isolated vertex {0}")]
    IsolatedVertex(usize),
    #[error("graph is empty")]
    EmptyGraph,
    #[error("invalid degree parameter k = {0}")]
    InvalidDegree(usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid sequence prefix: {0}")]
    InvalidPrefix(String),
    #[error("family skeleton: {0}")]
    Skeleton(String),
    #[error("random regular graph: {0}")]
    Sampler(String),
    #[error("solver inconsistency: {0}")]
    Inconsistent(String),
    #[error("input: {0}")]
    Input(String),
    #[error("output: {0}")]
    Output(String),
}

pub type Result<T> = std::result::Result<T, Error>;
