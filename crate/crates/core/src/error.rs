use crate::geometry::RatPoint;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed rational {0:?}")]
    MalformedRational(String),
    #[error("empty point set")]
    EmptyPointSet,
    #[error("invalid polygon: {0}")]
    InvalidPolygon(&'static str),
    #[error("point {0} is not strictly inside the polygon")]
    NotInterior(RatPoint),
    #[error("zero direction vector")]
    ZeroDirection,
    #[error("point {0} is not a lattice point")]
    NotIntegral(RatPoint),
    #[error("multiplicity must be positive")]
    ZeroMultiplicity,

    #[error("convex hull has empty interior")]
    DegenerateHull,
    #[error("origin is not an interior point of the polygon")]
    OriginNotInterior,
    #[error("polygon is not reflexive: edge {from} -> {to} does not lie on a line <n, x> = 1")]
    NotReflexive { from: RatPoint, to: RatPoint },
    #[error("point {0} is not in the lattice-point set")]
    NotALatticePoint(RatPoint),
    #[error("support would be empty")]
    EmptySupport,
    #[error("{0} and {1} are not adjacent vertices")]
    NotAnEdge(RatPoint, RatPoint),
    #[error("edge {0} -> {1} has lattice length {2}, expected 1")]
    EdgeLatticeLength(RatPoint, RatPoint, String),

    #[error("one-parameter subgroup must be non-zero")]
    ZeroLambda,
    #[error("cone angle parameter {0} is outside [0, 1]")]
    BetaOutOfRange(String),
    #[error("barycenter is the origin, the ray point Q is undefined")]
    BarycenterAtOrigin,
    #[error("search bound must be at least 1")]
    ZeroBound,
}
