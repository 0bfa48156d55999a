use thiserror::Error;

/// Everything that can go wrong across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {{{0},{0}}} is a self-loop")]
    Loop(usize),

    #[error("edge {{{u},{v}}} has an endpoint outside 0..{order}")]
    EdgeOutOfRange { u: usize, v: usize, order: usize },

    #[error("edge {{{u},{v}}} appears more than once")]
    DuplicateEdge { u: usize, v: usize },

    #[error("vertex {vertex} is not in a graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },

    #[error("vertex {0} appears in more than one identification group")]
    OverlappingGroups(usize),

    #[error("identification groups must be nonempty")]
    EmptyGroup,

    #[error("unknown graph family `{0}`")]
    UnknownGraph(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid glue specification: {0}")]
    InvalidGlue(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("multiset sum needs two nonempty operands")]
    EmptyMultiset,

    #[error("component has {edges} edges; forest enumeration is limited to {bound}")]
    OracleBound { edges: usize, bound: usize },

    #[error("vertices {u} and {v} lie in different components")]
    Disconnected { u: usize, v: usize },

    #[error("graph order {order} exceeds the configured bound {bound}")]
    OrderBound { order: usize, bound: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
