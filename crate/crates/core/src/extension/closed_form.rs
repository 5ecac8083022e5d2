//! Closed-form points defined by two intervals.
//!
//! Each function returns the common point of the two conics attached to
//! `[x, y]` and `[x', y']` in the matching geometry: orthogonal circles,
//! orthogonal equilateral hyperbolas, and downward parabolas with focus
//! on the real line. The reported `v` is always non-negative.

use crate::eph::EphClass;
use crate::error::{invalid, GeometryError, Result};
use crate::extension::interval::ExtensionPoint;
use crate::scalar::Scalar;

fn check_finite<T: Scalar>(values: [T; 4]) -> Result<()> {
    if values.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(invalid("interval endpoints must be finite"))
    }
}

fn order_error<T: Scalar>(expected: &str, x: T, y: T, xp: T, yp: T) -> GeometryError {
    GeometryError::Order(format!("expected {expected}, got x={x}, y={y}, x'={xp}, y'={yp}"))
}

/// Shared abscissa `(xy - x'y') / (x + y - x' - y')` of the orthogonal cases.
fn radical_point<T: Scalar>(x: T, y: T, xp: T, yp: T, radicand: T, tau: EphClass) -> Result<ExtensionPoint<T>> {
    let den = x + y - xp - yp;
    if den == T::zero() {
        // Excluded by either ordering; kept as a guard for the generic path.
        return Err(GeometryError::Degenerate("intervals share their midpoint".into()));
    }
    let u = (x * y - xp * yp) / den;
    let v = (radicand.max(T::zero()).sqrt() / den).abs();
    ExtensionPoint::new(u, v, tau)
}

/// Overlapping intervals `x < x' < y < y'`: the intersection of the
/// semicircles with diameters `[x, y]` and `[x', y']`.
pub fn extension_point_elliptic<T: Scalar>(x: T, y: T, xp: T, yp: T) -> Result<ExtensionPoint<T>> {
    check_finite([x, y, xp, yp])?;
    if !(x < xp && xp < y && y < yp) {
        return Err(order_error("x < x' < y < y'", x, y, xp, yp));
    }
    let radicand = (x - yp) * (x - xp) * (xp - y) * (y - yp);
    radical_point(x, y, xp, yp, radicand, EphClass::Elliptic)
}

/// Disjoint intervals `x < y < x' < y'`: the intersection of the
/// equilateral hyperbolas with vertices at the endpoints.
pub fn extension_point_hyperbolic<T: Scalar>(x: T, y: T, xp: T, yp: T) -> Result<ExtensionPoint<T>> {
    check_finite([x, y, xp, yp])?;
    if !(x < y && y < xp && xp < yp) {
        return Err(order_error("x < y < x' < y'", x, y, xp, yp));
    }
    let radicand = (x - yp) * (x - xp) * (xp - y) * (yp - y);
    radical_point(x, y, xp, yp, radicand, EphClass::Hyperbolic)
}

fn sorted<T: Scalar>(a: T, b: T) -> (T, T) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Intersection of the focally orthogonal parabolas over two intervals.
///
/// Endpoints of each interval may come in either order. Of the two roots
/// of the closed form, the one between the middle two endpoints is
/// reported: the overlap for overlapping intervals, the gap otherwise.
/// Intervals of equal length make the closed form `0/0`; the linear
/// intersection equation is solved instead. Nested intervals have no
/// real common point.
pub fn extension_point_parabolic<T: Scalar>(x: T, y: T, xp: T, yp: T) -> Result<ExtensionPoint<T>> {
    check_finite([x, y, xp, yp])?;
    let (x, y) = sorted(x, y);
    let (xp, yp) = sorted(xp, yp);
    if x == y || xp == yp {
        return Err(invalid("parabolic extension needs intervals of positive length"));
    }
    if x == xp && y == yp {
        return Err(invalid("parabolic extension needs two distinct intervals"));
    }
    let d2 = (x - xp) * (y - yp) * (y - x) * (yp - xp);
    if d2 < T::zero() {
        return Err(GeometryError::NoIntersection);
    }
    let (len, lenp) = (y - x, yp - xp);
    let den = lenp - len;
    let scale = x.abs().max(y.abs()).max(xp.abs()).max(yp.abs()).max(T::one());
    if den.abs() <= T::epsilon().sqrt() * scale {
        return parabolic_direct(x, y, xp, yp);
    }
    let d = d2.sqrt();
    let candidates = [d, -d].map(|d| {
        let u = (x * yp - y * xp + d) / den;
        let v = ((xp - x) * (yp - y) * (y - x + yp - xp) + (x + y - xp - yp) * d) / (den * den);
        (u, v)
    });
    // The difference of the two parabolas changes sign between the second
    // and third endpoints in sorted order, so exactly one root lies there.
    let mut ends = [x, y, xp, yp];
    ends.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    let (lo, hi) = (ends[1], ends[2]);
    let mid = (lo + hi) * T::half();
    let inside = |u: T| lo <= u && u <= hi;
    let (u, v) = match (inside(candidates[0].0), inside(candidates[1].0)) {
        (true, false) => candidates[0],
        (false, true) => candidates[1],
        _ if (candidates[0].0 - mid).abs() <= (candidates[1].0 - mid).abs() => candidates[0],
        _ => candidates[1],
    };
    ExtensionPoint::new(u, v.abs(), EphClass::Parabolic)
}

/// Solves `L'(u - x)(u - y) = L(u - x')(u - y')` for the root that stays
/// bounded as the lengths `L`, `L'` approach each other.
fn parabolic_direct<T: Scalar>(x: T, y: T, xp: T, yp: T) -> Result<ExtensionPoint<T>> {
    let (len, lenp) = (y - x, yp - xp);
    let a = lenp - len;
    let b = len * (xp + yp) - lenp * (x + y);
    let c = lenp * x * y - len * xp * yp;
    let disc = (b * b - T::lit(4.0) * a * c).max(T::zero());
    let sign = if b >= T::zero() { T::one() } else { -T::one() };
    let q = -(b + sign * disc.sqrt()) * T::half();
    if q == T::zero() {
        return Err(GeometryError::Degenerate("parabolas coincide".into()));
    }
    let u = c / q;
    let v = ((u - x) * (u - y) / len).abs();
    ExtensionPoint::new(u, v, EphClass::Parabolic)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_elliptic_value() {
        let p = extension_point_elliptic(0.0f64, 2.0, 1.0, 3.0).unwrap();
        assert!((p.u - 1.5).abs() < 1e-15 && (p.v - 0.75f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn reciprocal_pairs_give_unit_point() {
        let p = extension_point_elliptic(-2.0f64, 0.5, -1.0, 1.0).unwrap();
        assert!(p.u.abs() < 1e-12 && (p.v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn named_hyperbolic_value() {
        let p = extension_point_hyperbolic(0.0f64, 1.0, 2.0, 3.0).unwrap();
        assert!((p.u - 1.5).abs() < 1e-15 && (p.v - 12f64.sqrt() / 4.0).abs() < 1e-15);
    }

    #[test]
    fn named_parabolic_values() {
        let p = extension_point_parabolic(0.0f64, 2.0, 1.0, 4.0).unwrap();
        assert!((p.u - (-2.0 + 2.0 * 3f64.sqrt())).abs() < 1e-12);
        assert!((p.v - 0.392_304_845_413_264).abs() < 1e-12);
        let p = extension_point_parabolic(0.0f64, 2.0, 1.0, 3.0).unwrap();
        assert!((p.u - 1.5).abs() < 1e-15 && (p.v - 0.375).abs() < 1e-15);
    }

    #[test]
    fn orders_are_enforced() {
        assert!(matches!(extension_point_elliptic(0.0f64, 1.0, 2.0, 3.0), Err(GeometryError::Order(_))));
        assert!(matches!(extension_point_hyperbolic(0.0f64, 2.0, 1.0, 3.0), Err(GeometryError::Order(_))));
        assert!(extension_point_elliptic(0.0f64, f64::NAN, 1.0, 3.0).is_err());
    }

    #[test]
    fn nested_parabolas_do_not_meet() {
        assert_eq!(extension_point_parabolic(0.0f64, 4.0, 1.0, 2.0), Err(GeometryError::NoIntersection));
        assert!(extension_point_parabolic(0.0f64, 1.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn parabolic_accepts_reversed_endpoints() {
        let a = extension_point_parabolic(2.0f64, 0.0, 4.0, 1.0).unwrap();
        let b = extension_point_parabolic(0.0f64, 2.0, 1.0, 4.0).unwrap();
        assert_eq!(a, b);
    }
}
