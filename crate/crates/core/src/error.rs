use thiserror::Error;

/// Errors raised when building or parsing a polytope.
#[derive(Debug, Error)]
pub enum PolytopeError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("vertex {0} does not lie in exactly 3 facets")]
    NonSimpleVertex(u32),
    #[error("Euler relation violated: {0}")]
    EulerViolation(String),
    #[error("facets {0} and {1} share more than one edge")]
    MultiEdgeFacetPair(usize, usize),
    #[error("vertex-edge graph is not 3-connected: {0}")]
    NotThreeConnected(String),
    #[error("facet cycles are not a consistent rotation system: {0}")]
    RotationSystem(String),
}

/// Why a straightening along an edge is not defined or not wanted.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Obstruction {
    #[error("no straightening is defined on the simplex")]
    Simplex,
    #[error("3-belt through the merged facets (third facet {third})")]
    ThreeBelt { third: usize },
    #[error("flanking facet {0} is a triangle")]
    TriangleFlank(usize),
    #[error("{0}")]
    BadEdge(String),
}

#[derive(Debug, Error)]
pub enum TransformError {
    #[error("invalid truncation spec: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

#[derive(Debug, Error)]
pub enum QuasitoricError {
    #[error("coloring is not proper: facets {0} and {1} are adjacent and share color {2}")]
    ImproperColoring(usize, usize, u8),
    #[error("singular vertex minor at vertex {0} (det {1})")]
    SingularMinor(u32, i64),
    #[error("malformed presentation text: {0}")]
    Presentation(String),
}

#[derive(Debug, Error)]
pub enum BettiError {
    #[error("full subset sweep is gated at m <= {limit}, got m = {m}")]
    TooManyFacets { m: usize, limit: usize },
    #[error("mode {0} is undefined for this input")]
    BadMode(String),
}
