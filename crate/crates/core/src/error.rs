use thiserror::Error;

/// Errors produced anywhere in the crate.
///
/// Variants are grouped by the subsystem that raises them; the CLI maps each
/// group onto a stable exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // tree construction and codecs
    #[error("edge list is not connected")]
    NotConnected,
    #[error("edge list contains a cycle")]
    HasCycle,
    #[error("vertex ids must be exactly 0..n-1: {0}")]
    BadVertexIds(String),
    #[error("invalid Prüfer code: {0}")]
    BadCode(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex {vertex} out of range for tree of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("operation requires at least {required} vertices, tree has {order}")]
    TooSmall { required: usize, order: usize },

    // sequences
    #[error("invalid degree sequence: {0}")]
    InvalidDegreeSequence(String),
    #[error("invalid segment sequence: {0}")]
    InvalidSegmentSequence(String),

    // Steiner metrics
    #[error("vertex set is empty")]
    EmptySet,
    #[error("k = {k} is outside 2..={order}")]
    BadK { k: usize, order: usize },
    #[error("brute-force oracle is limited to {limit} vertices, tree has {order}")]
    OracleTooLarge { limit: usize, order: usize },

    // transformations
    #[error("invalid transformation site: {0}")]
    InvalidSite(String),
    #[error("tree is not a generalized star")]
    NotGeneralizedStar,
    #[error("generalized star is already balanced")]
    AlreadyBalanced,

    // extremal constructions
    #[error("infeasible degree sequence: {0}")]
    InfeasibleSequence(String),
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("sequences have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("sequences have different sums ({0} vs {1})")]
    SumMismatch(usize, usize),
    #[error("degree sequences are incomparable under majorization")]
    Incomparable,

    // census
    #[error("order {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("unknown name {0:?}")]
    UnknownName(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
