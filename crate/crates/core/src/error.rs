use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid edge ({u}, {v}) for a graph on {n} vertices")]
    InvalidEdge { u: usize, v: usize, n: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("edge list parse error at line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("{what}: n = {n} exceeds the cap of {cap}")]
    Capacity { what: &'static str, n: usize, cap: usize },

    #[error("vertex set must not be empty")]
    EmptySet,

    #[error("expected at least {min} terminals, got {got}")]
    TooFewTerminals { min: usize, got: usize },

    #[error("endpoints must be distinct (got {0} twice)")]
    SameEndpoints(usize),

    #[error("no path: terminals {0} are not in a common component")]
    NoPath(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("set {0} is not convex")]
    NotConvex(String),

    #[error("vertex {vertex} is not in the set {set}")]
    NotInSet { vertex: usize, set: String },

    #[error("convexity parameter k must be at least 2 (got {0})")]
    InvalidK(usize),

    #[error("unknown check `{name}`; known checks: {known}")]
    UnknownCheck { name: String, known: String },

    #[error("{0}")]
    Usage(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
