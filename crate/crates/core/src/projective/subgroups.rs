//! Parametrised one-parameter subgroups of SL(2, R).
//!
//! `A`, `N`, `K` are the Iwasawa factors; `A'`, `N'`, `K` share the shape
//! `[[a, tau b], [b, a]]` and are collected as `H_tau`.

use crate::eph::EphClass;
use crate::mat2::Mat2;
use crate::scalar::Scalar;

/// `diag(e^-t, e^t)`.
pub fn a_subgroup<T: Scalar>(t: T) -> Mat2<T> {
    Mat2::diag((-t).exp(), t.exp())
}

/// `[[1, t], [0, 1]]`.
pub fn n_subgroup<T: Scalar>(t: T) -> Mat2<T> {
    Mat2::new(T::one(), t, T::zero(), T::one())
}

/// Rotation `[[cos t, -sin t], [sin t, cos t]]`.
pub fn k_subgroup<T: Scalar>(t: T) -> Mat2<T> {
    let (s, c) = t.sin_cos();
    Mat2::new(c, -s, s, c)
}

/// `[[cosh t, sinh t], [sinh t, cosh t]]`.
pub fn a_prime_subgroup<T: Scalar>(t: T) -> Mat2<T> {
    let (s, c) = (t.sinh(), t.cosh());
    Mat2::new(c, s, s, c)
}

/// `[[1, 0], [t, 1]]`.
pub fn n_prime_subgroup<T: Scalar>(t: T) -> Mat2<T> {
    Mat2::new(T::one(), T::zero(), t, T::one())
}

/// `H_tau(t) = exp(t [[0, tau], [1, 0]])`: `K`, `N'` or `A'`.
pub fn h_tau<T: Scalar>(tau: EphClass, t: T) -> Mat2<T> {
    match tau {
        EphClass::Elliptic => k_subgroup(t),
        EphClass::Parabolic => n_prime_subgroup(t),
        EphClass::Hyperbolic => a_prime_subgroup(t),
    }
}

/// Generator `[[0, tau], [1, 0]]` of `H_tau`.
pub fn h_tau_generator<T: Scalar>(tau: EphClass) -> Mat2<T> {
    Mat2::new(T::zero(), tau.value(), T::one(), T::zero())
}

/// Whether `m` has the shape `[[a, tau b], [b, a]]` within `eps`.
pub fn in_h_tau<T: Scalar>(tau: EphClass, m: &Mat2<T>, eps: T) -> bool {
    (m.a - m.d).abs() <= eps && (m.b - tau.value::<T>() * m.c).abs() <= eps
}
