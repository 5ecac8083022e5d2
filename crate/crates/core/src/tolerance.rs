//! Comparison tolerances.

use crate::scalar::Scalar;

/// Default tolerance for projective equality and general residuals.
pub const DEFAULT_EPS: f64 = 1e-9;

/// Default tolerance for elliptic/parabolic/hyperbolic decisions.
///
/// Wider than [`DEFAULT_EPS`]: the triple discriminant is a degree-six
/// polynomial in the endpoints and accumulates more rounding.
pub const DEFAULT_EPS_CLASS: f64 = 1e-7;

/// Pair of tolerances threaded through the engine.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance<T> {
    /// Projective equality, isotropy and residual checks.
    pub eps: T,
    /// Guard band around the parabolic boundary.
    pub eps_class: T,
}

impl<T: Scalar> Tolerance<T> {
    pub fn new(eps: T, eps_class: T) -> Self {
        Self { eps, eps_class }
    }
}

impl<T: Scalar> Default for Tolerance<T> {
    fn default() -> Self {
        Self { eps: T::lit(DEFAULT_EPS), eps_class: T::lit(DEFAULT_EPS_CLASS) }
    }
}
