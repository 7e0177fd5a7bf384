use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    EmptyGraph,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex index {index} out of range for a graph on {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
    #[error("{0}-{1} is not an edge")]
    EdgeNotPresent(usize, usize),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("idleness {0} is outside [0, 1]")]
    IdlenessOutOfRange(String),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("invalid measure: {0}")]
    InvalidMeasure(String),
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is not cubic")]
    NotCubic,
    #[error("girth {} is below the required {required}", .found.map_or("infinite".to_string(), |g| g.to_string()))]
    GirthTooSmall {
        found: Option<usize>,
        required: usize,
    },
    #[error("cubic graphs need an even number of vertices, got {0}")]
    OddOrder(usize),
    #[error("unsupported vertex count {0}")]
    UnsupportedSize(usize),
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("search exceeded its budget of {0} nodes")]
    SearchBudgetExceeded(u64),
    #[error("line {line}: {source}")]
    AtLine { line: usize, source: Box<Error> },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
