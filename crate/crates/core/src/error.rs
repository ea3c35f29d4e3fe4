use thiserror::Error;

/// Errors raised while decoding or constructing graphs and edge subsets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("vertex {vertex} has degree {degree}: graph is not cubic")]
    NotCubic { vertex: usize, degree: usize },

    #[error("vertex {vertex}: graph is not simple ({message})")]
    NotSimple { vertex: usize, message: String },

    #[error("vertex {vertex} is unreachable from vertex 0: graph is not connected")]
    Disconnected { vertex: usize },

    #[error("invalid vertex count {0}: a cubic graph needs an even number of at least 4 vertices")]
    VertexCount(usize),

    #[error("graph has a bridge (edge {edge})")]
    NotBridgeless { edge: usize },

    #[error("edge index {index} out of range (graph has {edges} edges)")]
    EdgeOutOfRange { index: usize, edges: usize },

    #[error("edge subset of width {found} does not belong to a graph with {expected} edges")]
    WidthMismatch { expected: usize, found: usize },

    #[error("operands belong to different graphs")]
    MixedGraphs,

    #[error("vertex {vertex} has degree {degree} in the edge set: {expected}")]
    Parity {
        vertex: usize,
        degree: usize,
        expected: &'static str,
    },

    #[error("unknown graph name `{0}` (expected k4, k3_3 or petersen)")]
    UnknownName(String),

    #[error("edge {edge} lies in all three joins")]
    NonEmptyIntersection { edge: usize },

    #[error("invalid Fano-flow at {location}: {message}")]
    InvalidFlow { location: String, message: String },

    #[error("connector pair of gadget {gadget} is split by the join")]
    SplitConnector { gadget: usize },

    #[error("search space too large: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
