use thiserror::Error;

/// Errors raised by the library. Every variant is a domain error: the input
/// was well-formed data but violated an operation's precondition.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid partition spec: {0}")]
    InvalidPartition(String),

    #[error("invalid join spec: clique size {clique_size}, cycle length {cycle_length}")]
    InvalidJoin {
        clique_size: usize,
        cycle_length: usize,
    },

    #[error("edge ({0}, {1}) is not in the graph")]
    MissingEdge(usize, usize),

    #[error("vertex {0} is not in the graph")]
    MissingVertex(usize),

    #[error("dimension formula does not apply to {0}")]
    FormulaNotApplicable(String),

    #[error("graph must be connected and have at least one edge")]
    NotConnectedNonEmpty,

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("no apex point exists (discriminant {discriminant:e})")]
    NoApex { discriminant: f64 },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
