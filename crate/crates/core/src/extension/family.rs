//! Interval families preserved by `H_τ` and the forms they determine.

use crate::cycle::{pairing, real_line, Cycle};
use crate::eph::EphClass;
use crate::error::{degenerate, GeometryError, Result};
use crate::extension::interval::Interval;
use crate::scalar::Scalar;

/// `[x, (x + τt) / (tx + 1)]`, the member through `x` of the family of
/// intervals permuted by `H_τ`.
///
/// Requires `t ≠ 0` and `1 - τt² > 0`. A second endpoint at infinity
/// (`tx + 1 = 0`) is reported as a domain error as well.
pub fn invariant_interval_family<T: Scalar>(tau: EphClass, t: T, x: T) -> Result<Interval<T>> {
    let tv = tau.value::<T>();
    if t == T::zero() || !t.is_finite() || !x.is_finite() {
        return Err(GeometryError::Domain(format!("family parameter t={t} must be finite and non-zero")));
    }
    if T::one() - tv * t * t <= T::zero() {
        return Err(GeometryError::Domain(format!("1 - τt² must be positive (τ={}, t={t})", tau.tau())));
    }
    let den = t * x + T::one();
    if den.abs() <= T::epsilon() * (t * x).abs().max(T::one()) {
        return Err(GeometryError::Domain(format!("tx + 1 vanishes at x={x}")));
    }
    Interval::from_values(x, (x + tv * t) / den)
}

/// Parameter `t = (x - y) / (xy - τ)` of the `H_τ` element `x ↦ y`;
/// `None` when `xy = τ` within `eps`, i.e. `t = ∞`.
pub fn t_parameter<T: Scalar>(x: T, y: T, tau: EphClass, eps: T) -> Option<T> {
    let den = x * y - tau.value::<T>();
    if den.abs() <= eps * (x * y).abs().max(T::one()) {
        return None;
    }
    Some((x - y) / den)
}

/// The form e-orthogonal to the point cycles `C_xx`, `C_yy` and to `P̂`:
/// `[[½(x + y + xy - τ), -xy], [1, ½(-x - y + xy - τ)]]`.
pub fn orthogonal_form_through<T: Scalar>(x: T, y: T, tau: EphClass, eps: T) -> Result<Cycle<T>> {
    if (x - y).abs() <= eps * x.abs().max(y.abs()).max(T::one()) {
        return Err(degenerate("orthogonality conditions have rank below three for x = y"));
    }
    let h = T::half();
    Cycle::new((x * y - tau.value::<T>()) * h, (x + y) * h, T::one(), x * y)
}

/// `-n / sqrt|l² + n² - km|`, the cosine of the angle at which the curve
/// of `Q` meets the real line.
pub fn cosine_to_real_line<T: Scalar>(q: &Cycle<T>, eps: T) -> Result<T> {
    let den = q.l * q.l + q.n * q.n - q.k * q.m;
    if den.abs() <= eps * q.norm() * q.norm() {
        return Err(GeometryError::UndefinedAngle);
    }
    Ok(-q.n / den.abs().sqrt())
}

/// `⟨Q, R⟩_τ / sqrt|⟨Q, Q⟩_τ|` with `R = 2^{-1/2} I` the real line.
///
/// Invariant under rescaling `Q` by a positive factor; a negative factor
/// flips the sign, so only the absolute value is a property of the cycle.
/// For the form through `x` and `y` this equals `±τ / sqrt|t² - τ|`.
pub fn real_line_fraction<T: Scalar>(q: &Cycle<T>, tau: EphClass, eps: T) -> Result<T> {
    let self_pairing = pairing(q, q, tau);
    if self_pairing.abs() <= eps * q.norm() * q.norm() {
        return Err(GeometryError::UndefinedAngle);
    }
    Ok(pairing(q, &real_line(), tau) / self_pairing.abs().sqrt())
}
