use thiserror::Error;

/// Errors raised by the geometry engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Two point triples were expected to share an orientation.
    #[error("orientation mismatch: {0}")]
    Orientation(String),

    /// Interval endpoints are not in the order a closed form requires.
    #[error("endpoint order violated: {0}")]
    Order(String),

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("outside the domain: {0}")]
    Domain(String),

    /// The angle to the real line is undefined for e-isotropic cycles.
    #[error("angle with the real line is undefined (l^2 + n^2 - km = 0)")]
    UndefinedAngle,

    #[error("curves do not intersect")]
    NoIntersection,
}

pub type Result<T, E = GeometryError> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> GeometryError {
    GeometryError::InvalidInput(msg.into())
}

pub(crate) fn degenerate(msg: impl Into<String>) -> GeometryError {
    GeometryError::Degenerate(msg.into())
}
