use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is not a tree ({vertices} vertices, {edges} edges)")]
    NotATree { vertices: usize, edges: usize },

    #[error("order {order} exceeds enumeration cap {cap}")]
    OrderAboveCap { order: usize, cap: usize },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("invalid candidate shape: {0}")]
    InvalidShape(String),

    #[error("invalid degree multiset: {0}")]
    DegreeMultiset(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("checkpoint mismatch: {0}")]
    Checkpoint(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
