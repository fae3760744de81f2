use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph order {n} exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("malformed graph6 input: {0}")]
    MalformedGraph6(String),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
    #[error("malformed family spec: {0}")]
    MalformedFamilySpec(String),
    #[error("exact matching number supports at most {max} vertices, got {n}")]
    TooLargeForExactMatching { n: usize, max: usize },
    #[error("vertex set {bits:#x} is not contained in a graph on {n} vertices")]
    SetOutOfRange { bits: u64, n: usize },
    #[error("exhaustive computation supports at most {max} vertices, got {n}")]
    TooLargeForExhaustive { n: usize, max: usize },
    #[error("output exceeds the configured cap of {cap} dominating sets")]
    OutputCapExceeded { cap: usize },
    #[error("invalid reconfiguration endpoint: {0}")]
    InvalidEndpoint(String),
    #[error("dominating graph has no vertices (k is below the domination number)")]
    EmptyDominatingGraph,
    #[error("canonical labeling supports at most {max} vertices, got {n}")]
    TooLargeForCanonical { n: usize, max: usize },
    #[error("census supports orders up to {max}, got {n}")]
    TooLargeForCensus { n: usize, max: usize },
    #[error("invalid target count {m}: {reason}")]
    InvalidParity { m: u64, reason: String },
    #[error("domination number {gamma} is below the required minimum of 3")]
    PreconditionGammaTooSmall { gamma: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
