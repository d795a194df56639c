use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),

    #[error("duplicate edge `{0}`--`{1}`")]
    DuplicateEdge(String, String),

    #[error("operation requires a loopless graph, but vertex `{0}` has a loop")]
    LoopPresent(String),

    #[error("operation requires a non-bipartite graph")]
    Bipartite,

    #[error("operation requires a graph with at least one edge")]
    EmptyGraph,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("instance too large: {what} would have {count} vertices, cap is {cap}")]
    SizeCap {
        what: String,
        count: usize,
        cap: usize,
    },

    /// Search stopped before deciding. Never a refutation.
    #[error("search budget of {budget} nodes exhausted without a decision")]
    Unknown { budget: u64 },

    #[error("malformed graph file: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
