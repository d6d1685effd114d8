//! Crate-wide error type.

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("graph is not connected")]
    DisconnectedGraph,
    #[error("edge {0} is a loop (loops are rejected)")]
    LoopEdge(usize),
    #[error("edge {edge} has endpoint {endpoint} outside 0..{vertex_count}")]
    BadEndpoint {
        edge: usize,
        endpoint: usize,
        vertex_count: usize,
    },
    #[error("edge {0} lies in the spanning tree")]
    EdgeInTree(usize),
    #[error("edge universes differ: {0} vs {1}")]
    UniverseMismatch(usize, usize),
    #[error("embedding is invalid: {0}")]
    InvalidEmbedding(String),
    #[error("expected Euler characteristic {expected}, embedding has {actual}")]
    WrongChi { expected: i64, actual: i64 },
    #[error("orientable embedding has odd Euler characteristic {0}")]
    InvalidParity(i64),
    #[error("edge union of the two cycles is not a theta subgraph: {0}")]
    NotTheta(String),
    #[error("theta subgraph is separating: its induced embedding has {0} faces")]
    SeparatingCycle(usize),
    #[error("face boundaries and fundamental cycles do not reach full rank (got {got}, need {need})")]
    RankDeficit { got: usize, need: usize },
    #[error("replacement preconditions do not hold")]
    PreconditionFailed,
    #[error("three-basis construction failed: {0}")]
    TheoremViolation(String),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("no basis with the requested sparsity exists within the search bound")]
    NotFound,
    #[error("argument out of domain: {0}")]
    DomainError(String),
    #[error("recursion did not terminate: {0}")]
    NonTermination(String),
    #[error("parse error: {0}")]
    Parse(String),
}
