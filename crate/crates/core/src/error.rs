use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("parse error on line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("the empty graph has no cliques")]
    EmptyGraph,

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge {{{0}, {1}}} is not present")]
    MissingEdge(usize, usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("graphs too large for exact isomorphism ({n} vertices, limit {limit})")]
    TooLargeForIsomorphism { n: usize, limit: usize },

    #[error("simplex budget of {budget} exceeded")]
    SimplexBudgetExceeded { budget: usize },

    #[error("clique budget of {budget} exceeded")]
    CliqueBudgetExceeded { budget: usize },

    #[error("not a low degree graph: {0}")]
    NotLowDegree(String),

    #[error("invalid domination certificate: vertex {vertex} is not dominated by {dominator}")]
    InvalidCertificate { vertex: usize, dominator: usize },

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("trace corrupted at move {index}: {message}")]
    TraceCorrupted { index: usize, message: String },
}
