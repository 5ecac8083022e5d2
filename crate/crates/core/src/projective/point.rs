use std::fmt;

use crate::error::{invalid, Result};
use crate::scalar::Scalar;

/// Point `[p : q]` of the real projective line.
///
/// Stored canonically: `[x : 1]` for finite points and `[1 : 0]` for
/// infinity. A second coordinate below machine epsilon relative to the
/// first is read as infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjPoint<T> {
    p: T,
    q: T,
}

impl<T: Scalar> ProjPoint<T> {
    pub fn new(p: T, q: T) -> Result<Self> {
        if !(p.is_finite() && q.is_finite()) {
            return Err(invalid("homogeneous coordinates must be finite"));
        }
        if p == T::zero() && q == T::zero() {
            return Err(invalid("[0 : 0] is not a point of the projective line"));
        }
        Ok(Self::canonical(p, q))
    }

    /// Caller guarantees `(p, q)` is finite and non-zero.
    pub(crate) fn canonical(p: T, q: T) -> Self {
        if q.abs() <= T::epsilon() * p.abs() {
            Self::infinity()
        } else {
            Self { p: p / q, q: T::one() }
        }
    }

    pub fn finite(x: T) -> Self {
        Self { p: x, q: T::one() }
    }

    pub fn infinity() -> Self {
        Self { p: T::one(), q: T::zero() }
    }

    /// Accepts `±inf` as the point at infinity.
    pub fn from_scalar(x: T) -> Result<Self> {
        if x.is_infinite() {
            Ok(Self::infinity())
        } else if x.is_nan() {
            Err(invalid("NaN is not a point"))
        } else {
            Ok(Self::finite(x))
        }
    }

    pub fn is_infinite(&self) -> bool {
        self.q == T::zero()
    }

    /// Affine coordinate, `None` at infinity.
    pub fn value(&self) -> Option<T> {
        (!self.is_infinite()).then_some(self.p)
    }

    /// Affine coordinate with infinity mapped to `+inf`.
    pub fn to_scalar(&self) -> T {
        self.value().unwrap_or_else(T::infinity)
    }

    pub fn homogeneous(&self) -> [T; 2] {
        [self.p, self.q]
    }

    /// Homogeneous pair scaled to unit Euclidean length.
    pub fn unit(&self) -> [T; 2] {
        let n = self.p.hypot(self.q);
        [self.p / n, self.q / n]
    }

    /// Projective equality: the unit representatives span the same line.
    pub fn approx_eq(&self, other: &Self, eps: T) -> bool {
        let [p1, q1] = self.unit();
        let [p2, q2] = other.unit();
        (p1 * q2 - p2 * q1).abs() <= eps
    }
}

impl<T: Scalar> fmt::Display for ProjPoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(x) => write!(f, "{x}"),
            None => f.write_str("inf"),
        }
    }
}
