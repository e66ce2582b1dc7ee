use thiserror::Error;

/// Errors raised by graph construction and the polyhedral routines.
///
/// Vertices and edges are reported with the 0-based indices of the Rust API.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("too many vertices: {0} (at most 64 are supported)")]
    TooManyVertices(usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge index {index} out of range (graph has {m} edges)")]
    EdgeOutOfRange { index: usize, m: usize },
    #[error("vector has length {got}, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has a K5 minor; no closed-form facet description exists, use the hull oracle")]
    HasK5Minor,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("enumeration bound exceeded: {what} is {got}, limit {limit}")]
    BoundExceeded {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    #[error("point set is not full-dimensional (affine dimension {dim}, ambient {ambient})")]
    NotFullDimensional { dim: usize, ambient: usize },
    #[error("not enough counts: need {needed}, got {got}")]
    InsufficientCounts { needed: usize, got: usize },
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by a desk-scale enumeration limit.
    pub fn is_bound(&self) -> bool {
        matches!(self, Error::BoundExceeded { .. })
    }

    pub(crate) fn bound(what: &'static str, limit: usize, got: usize) -> Self {
        Error::BoundExceeded { what, limit, got }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
