use thiserror::Error;

/// Errors produced by graph construction, clique computations and identity checks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CliqueError {
    #[error("empty input")]
    EmptyInput,
    #[error("malformed graph6 input: {0}")]
    MalformedGraph6(String),
    #[error("malformed edge list at line {line}: {reason}")]
    MalformedEdgeList { line: usize, reason: String },
    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{{{0}, {1}}} is not an edge")]
    EdgeAbsent(usize, usize),
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),
    #[error("exact integer overflow in {0}")]
    Overflow(&'static str),
    #[error("brute-force oracle limited to {max} vertices, got {n}")]
    OracleTooLarge { n: usize, max: usize },
    #[error("vertices {0:?} do not form a clique")]
    NotAClique(Vec<usize>),
    #[error("graph has {0} triangles; the triangle graph supports at most 64")]
    TooManyTriangles(usize),
    #[error("graph contains a K5 (clique number {0})")]
    NotK5Free(usize),
    #[error("invalid order k = {k}: must be at least {min}")]
    InvalidOrder { k: usize, min: usize },
    #[error("polynomial of degree {degree} cannot be reversed at base {base}")]
    DegreeExceedsBase { degree: usize, base: usize },
    #[error("check {0} does not fail on the given graph")]
    CheckPasses(String),
    #[error("invalid campaign configuration: {0}")]
    InvalidConfig(String),
    #[error("unknown check id {0:?}")]
    UnknownCheck(String),
}

pub type Result<T> = std::result::Result<T, CliqueError>;
