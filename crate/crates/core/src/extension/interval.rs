use std::fmt;

use crate::cycle::Cycle;
use crate::eph::EphClass;
use crate::error::{invalid, GeometryError, Result};
use crate::projective::{OrientedTriple, ProjPoint};
use crate::scalar::Scalar;

/// Ordered pair of distinct points `[x, y]` of the projective line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval<T> {
    pub x: ProjPoint<T>,
    pub y: ProjPoint<T>,
}

impl<T: Scalar> Interval<T> {
    /// Rejects endpoints that coincide up to rounding.
    pub fn new(x: ProjPoint<T>, y: ProjPoint<T>) -> Result<Self> {
        if x.approx_eq(&y, T::lit(100.0) * T::epsilon()) {
            return Err(invalid(format!("interval endpoints coincide ({x})")));
        }
        Ok(Self { x, y })
    }

    /// Affine endpoints, `±inf` meaning the point at infinity.
    pub fn from_values(x: T, y: T) -> Result<Self> {
        Self::new(ProjPoint::from_scalar(x)?, ProjPoint::from_scalar(y)?)
    }

    /// The endpoint cycle `C_xy`.
    pub fn cycle(&self) -> Cycle<T> {
        Cycle::from_endpoints(&self.x, &self.y)
    }
}

impl<T: Scalar> fmt::Display for Interval<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.x, self.y)
    }
}

/// Three intervals whose start points and end points are equally oriented.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlignedTriple<T> {
    intervals: [Interval<T>; 3],
    xs: OrientedTriple<T>,
    ys: OrientedTriple<T>,
}

impl<T: Scalar> AlignedTriple<T> {
    /// Fails with an orientation error when the triples `X` and `Y` of
    /// start and end points are oppositely oriented, and with invalid
    /// input when two start (or end) points coincide within `eps`.
    pub fn new(intervals: [Interval<T>; 3], eps: T) -> Result<Self> {
        let [a, b, c] = intervals;
        let xs = OrientedTriple::new(a.x, b.x, c.x, eps)?;
        let ys = OrientedTriple::new(a.y, b.y, c.y, eps)?;
        if xs.orientation() != ys.orientation() {
            return Err(GeometryError::Orientation(format!(
                "start points {{{}, {}, {}}} and end points {{{}, {}, {}}} are oppositely oriented",
                a.x, b.x, c.x, a.y, b.y, c.y
            )));
        }
        Ok(Self { intervals, xs, ys })
    }

    pub fn from_values(values: [[T; 2]; 3], eps: T) -> Result<Self> {
        let [a, b, c] = values;
        Self::new(
            [
                Interval::from_values(a[0], a[1])?,
                Interval::from_values(b[0], b[1])?,
                Interval::from_values(c[0], c[1])?,
            ],
            eps,
        )
    }

    pub fn intervals(&self) -> [Interval<T>; 3] {
        self.intervals
    }

    /// Start points `X = (x1, x2, x3)`.
    pub fn xs(&self) -> OrientedTriple<T> {
        self.xs
    }

    /// End points `Y = (y1, y2, y3)`.
    pub fn ys(&self) -> OrientedTriple<T> {
        self.ys
    }
}

/// Point `(u, v)` of the extended half-plane of a given geometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtensionPoint<T> {
    pub u: T,
    pub v: T,
    pub tau: EphClass,
}

impl<T: Scalar> ExtensionPoint<T> {
    /// `v = 0` is allowed for curves meeting on the real line.
    pub fn new(u: T, v: T, tau: EphClass) -> Result<Self> {
        if !(u.is_finite() && v.is_finite()) {
            return Err(invalid("extension point must be finite"));
        }
        if v < T::zero() {
            return Err(invalid(format!("extension point ({u}, {v}) lies below the real line")));
        }
        Ok(Self { u, v, tau })
    }

    pub fn approx_eq(&self, other: &Self, eps: T) -> bool {
        self.tau == other.tau && (self.u - other.u).abs() <= eps && (self.v - other.v).abs() <= eps
    }
}

impl<T: Scalar> fmt::Display for ExtensionPoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}) [{}]", self.u, self.v, self.tau)
    }
}
