use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TropError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("zero vector is not allowed here")]
    ZeroVector,
    #[error("operand is not on the tropical sphere")]
    NotOnSphere,
    #[error("matrix is not monomial")]
    NotMonomial,
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("matrix is not tropically orthogonal")]
    NotOrthogonal,
    #[error("size {0} exceeds the supported bound {1}")]
    TooLarge(usize, usize),
    #[error("generators are not tropically independent")]
    NotIndependent,
    #[error("points do not form a configuration")]
    NotAConfiguration,
    #[error("points are not in convex position")]
    NotConvexPosition,
    #[error("invalid value: {0}")]
    InvalidValue(String),
}
