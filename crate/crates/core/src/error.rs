use thiserror::Error;

/// Everything that can go wrong while building or solving an instance.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("points coincide within tolerance")]
    CoincidentPoints,
    #[error("lines are parallel within tolerance")]
    ParallelLines,
    #[error("point is off the segment's supporting line (distance {distance:e})")]
    OffLine { distance: f64 },
    #[error("line coefficients (a, b) vanish")]
    LineAtInfinity,
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("polygon requires n >= 3")]
    TooFewVertices,
    #[error("polygon is not strictly convex and counterclockwise at vertex {index}")]
    NotConvex { index: usize },
    #[error("point {index} is not strictly inside the outer polygon")]
    NotInside { index: usize },
    #[error("expected {expected} points, got {got}")]
    CountMismatch { expected: usize, got: usize },

    #[error("cevians are parallel")]
    DegenerateCevians,
    #[error("transversal does not cut both open segments through the cevian intersection")]
    TransversalMiss,

    #[error("Moebius matrix is singular")]
    SingularMap,
    #[error("projection center lies on a line it projects between")]
    CenterOnLine,
    #[error("fewer than three distinct points for a cross ratio")]
    TooManyCoincidences,

    #[error("argument outside the formula's domain: {0}")]
    DomainError(String),
    #[error("denominator vanishes")]
    SingularDenominator,
    #[error("quadratic has no real roots")]
    NoRealRoots,
    #[error("roots fall outside the admissible interval")]
    RootsOutOfRange,
    #[error("n and m must differ")]
    SameOrder,

    #[error("five points do not determine a unique conic")]
    RankDeficient,
    #[error("line is a component of the conic")]
    LineOnConic,
    #[error("only {usable} usable locus samples (need at least 5)")]
    DegenerateChain { usable: usize },
    #[error("point {index} is not on the conic (residual {residual:e})")]
    PointsNotOnConic { index: usize, residual: f64 },
    #[error("triangles are not perspective from a point (residual {residual:e})")]
    NotPerspective { residual: f64 },

    #[error("gamma point {index} of face {face} is off the face plane")]
    OffPlane { face: usize, index: usize },
    #[error("invalid polyhedron graph: {0}")]
    InvalidGraph(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, GeomError>;
