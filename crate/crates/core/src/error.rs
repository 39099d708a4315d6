use thiserror::Error;

/// Unified error type for every engine in the crate.
///
/// Budget violations are errors, not silent truncations: an engine that
/// cannot settle an instance exhaustively refuses it.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("duplicate vertex {0} in selector")]
    DuplicateVertex(usize),

    #[error("graph too large: {n} vertices exceeds the {max}-vertex limit")]
    TooManyVertices { n: usize, max: usize },

    #[error("{op}: instance over budget ({detail})")]
    OverBudget { op: &'static str, detail: String },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown graph id '{0}'")]
    UnknownGraph(String),

    #[error("unknown orientation id '{0}'")]
    UnknownOrientation(String),

    #[error("unknown claim id '{0}'")]
    UnknownClaim(String),

    #[error("orientation does not match graph: {0}")]
    BadOrientation(String),

    #[error("duplicate arc {0}->{1}")]
    DuplicateArc(usize, usize),

    #[error("antiparallel arcs {0}->{1} and {1}->{0}")]
    AntiparallelArcs(usize, usize),

    #[error("token function has {got} entries for a graph on {want} vertices")]
    TokenLengthMismatch { got: usize, want: usize },

    #[error("counter overflow while accumulating circulation counts")]
    CountOverflow,

    #[error("strategy does not fit this game: {0}")]
    StrategyMismatch(String),

    #[error("malformed script step at round {round}: {msg}")]
    BadScriptStep { round: usize, msg: String },

    #[error("strategy cannot be serialized as a state table: {0}")]
    StrategyNotTabular(String),

    #[error("invalid token spec '{0}': expected all=<k>, a comma list, or d1[:low=<indices>]")]
    BadTokenSpec(String),
}
