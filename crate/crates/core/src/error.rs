use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("graph order {order} exceeds the configured maximum {max}")]
    Overflow { order: usize, max: usize },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("graph has an isolated vertex {0}")]
    IsolatedVertex(usize),
    #[error("graph is trivial (order < 2)")]
    TrivialGraph,
    #[error("configuration weight {weight} exceeds the search budget {budget}")]
    WeightCapExceeded { weight: u64, budget: u32 },
    #[error("enumeration budget of {budget} configurations exhausted; value is at least {lower_bound}")]
    BudgetExceeded { budget: u64, lower_bound: u64 },
    #[error("order {order} exceeds the cap {cap} for this operation")]
    CapExceeded { order: usize, cap: usize },
    #[error("configuration has weight zero")]
    EmptyConfiguration,
    #[error("configuration has {got} entries, graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("vertex {vertex} holds {count} pebbles, above the cap {cap}")]
    CapViolated { vertex: usize, count: u32, cap: u32 },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Error {
        Error::Parse { line, message: message.into() }
    }
}
