//! The three SL(2, R)-invariant pairings of cycles and isotropic forms.

use crate::cycle::form::Cycle;
use crate::eph::PairingSignature;
use crate::error::{invalid, Result};
use crate::mat2::{Mat2, Mat4};
use crate::scalar::Scalar;

/// `Q_τ = [[l - τn, -m], [k, -l - τn]]`.
pub fn q_tau<T: Scalar>(q: &Cycle<T>, tau: PairingSignature) -> Mat2<T> {
    let tn = tau.value::<T>() * q.n;
    Mat2::new(q.l - tn, -q.m, q.k, -q.l - tn)
}

/// Invariant pairing `⟨Q, R⟩_τ = tr(Q_τ R) = 2 l l' - 2τ n n' - k m' - m k'`.
///
/// The sign makes the self-pairing of an endpoint cycle non-negative:
/// `⟨C_xy, C_xy⟩ = -2 det C_xy = (x - y)² / 2`.
pub fn pairing<T: Scalar>(q: &Cycle<T>, r: &Cycle<T>, tau: PairingSignature) -> T {
    let two = T::two();
    two * q.l * r.l - two * tau.value::<T>() * q.n * r.n - q.k * r.m - q.m * r.k
}

/// Gram matrix `J` of the pairing on `(n, l, k, m)`: `⟨Q, R⟩ = Qᵀ J R`.
pub fn pairing_matrix<T: Scalar>(sigma: PairingSignature) -> Mat4<T> {
    let (z, o, two) = (T::zero(), T::one(), T::two());
    [[-two * sigma.value::<T>(), z, z, z], [z, two, z, z], [z, z, z, -o], [z, z, -o, z]]
}

/// `|⟨Q, R⟩_τ| <= eps |Q| |R|`.
pub fn is_orthogonal<T: Scalar>(q: &Cycle<T>, r: &Cycle<T>, tau: PairingSignature, eps: T) -> bool {
    pairing(q, r, tau).abs() <= eps * q.norm() * r.norm()
}

/// Self-orthogonality, tested relative to `|Q|²` so the answer does not
/// depend on the projective scale of `Q`.
pub fn is_isotropic<T: Scalar>(q: &Cycle<T>, tau: PairingSignature, eps: T) -> bool {
    is_orthogonal(q, q, tau, eps)
}

/// Point of the plane encoded by a τ-isotropic form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IsotropicPoint<T> {
    Finite {
        u: T,
        v: T,
    },
    /// `k = 0`: the form has no normalised representative.
    AtInfinity,
}

impl<T: Scalar> IsotropicPoint<T> {
    pub fn finite(&self) -> Option<(T, T)> {
        match *self {
            IsotropicPoint::Finite { u, v } => Some((u, v)),
            IsotropicPoint::AtInfinity => None,
        }
    }
}

/// Normalised τ-isotropic form `[[u + v, -u² + τv²], [1, -u + v]]`.
pub fn point_to_isotropic<T: Scalar>(u: T, v: T, tau: PairingSignature) -> Cycle<T> {
    Cycle::raw(v, u, T::one(), u * u - tau.value::<T>() * v * v)
}

/// Reads `(u, v) = (l / k, n / k)` off a τ-isotropic form.
pub fn isotropic_to_point<T: Scalar>(q: &Cycle<T>, tau: PairingSignature, eps: T) -> Result<IsotropicPoint<T>> {
    if !is_isotropic(q, tau, eps) {
        return Err(invalid(format!("form {q} is not {tau}-isotropic")));
    }
    if q.k.abs() <= eps * q.norm() {
        return Ok(IsotropicPoint::AtInfinity);
    }
    Ok(IsotropicPoint::Finite { u: q.l / q.k, v: q.n / q.k })
}

/// `[[x, -xy], [1, -y]]`: a cycle `[[a, b], [c, d]]` is e-orthogonal to it
/// exactly when `ax + b - cxy - dy = 0`, i.e. when the map sends `x` to `y`.
pub fn orthogonality_remark_form<T: Scalar>(x: T, y: T) -> Cycle<T> {
    let h = T::half();
    Cycle::raw((x - y) * h, (x + y) * h, T::one(), x * y)
}

/// The real line as the form `2^{-1/2} I`; `⟨R, R⟩_τ = -τ`.
pub fn real_line<T: Scalar>() -> Cycle<T> {
    Cycle::raw(T::FRAC_1_SQRT_2(), T::zero(), T::zero(), T::zero())
}

/// `P̂ = [[1, τ], [1, 1]]`, the τ-isotropic form fixed by `H_τ`; its point is `(0, 1)`.
pub fn p_hat<T: Scalar>(tau: PairingSignature) -> Cycle<T> {
    Cycle::raw(T::one(), T::zero(), T::one(), -tau.value::<T>())
}
