//! Real 2x2 matrices and the closed-form exponential of traceless ones.

use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Scalar;

/// Row-major real 2x2 matrix `[[a, b], [c, d]]`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Mat2<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

/// Row-major real 4x4 matrix.
pub type Mat4<T> = [[T; 4]; 4];

impl<T: Scalar> Mat2<T> {
    pub const fn new(a: T, b: T, c: T, d: T) -> Self {
        Self { a, b, c, d }
    }

    pub fn from_rows(rows: [[T; 2]; 2]) -> Self {
        Self::new(rows[0][0], rows[0][1], rows[1][0], rows[1][1])
    }

    pub fn rows(&self) -> [[T; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    pub fn identity() -> Self {
        Self::new(T::one(), T::zero(), T::zero(), T::one())
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::zero())
    }

    pub fn diag(x: T, y: T) -> Self {
        Self::new(x, T::zero(), T::zero(), y)
    }

    pub fn det(&self) -> T {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> T {
        self.a + self.d
    }

    /// Adjugate `[[d, -b], [-c, a]]`, equal to `det * inverse`.
    pub fn adjugate(&self) -> Self {
        Self::new(self.d, -self.b, -self.c, self.a)
    }

    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        if det == T::zero() || !det.is_finite() {
            return None;
        }
        Some(self.adjugate().scale(T::one() / det))
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.a, self.c, self.b, self.d)
    }

    pub fn scale(&self, s: T) -> Self {
        Self::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }

    pub fn apply_vec(&self, v: [T; 2]) -> [T; 2] {
        [self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1]]
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> T {
        self.a.abs().max(self.b.abs()).max(self.c.abs()).max(self.d.abs())
    }

    /// Frobenius norm.
    pub fn norm(&self) -> T {
        (self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d).sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.a.is_finite() && self.b.is_finite() && self.c.is_finite() && self.d.is_finite()
    }

    /// Entrywise comparison with absolute tolerance.
    pub fn approx_eq(&self, other: &Self, eps: T) -> bool {
        (*self - *other).max_abs() <= eps
    }

    /// Equality up to a non-zero real factor.
    pub fn projectively_eq(&self, other: &Self, eps: T) -> bool {
        let (na, nb) = (self.norm(), other.norm());
        if na == T::zero() || nb == T::zero() {
            return na == nb;
        }
        let x = self.scale(T::one() / na);
        let y = other.scale(T::one() / nb);
        x.approx_eq(&y, eps) || x.approx_eq(&-y, eps)
    }

    /// Divides by `sqrt|det|` so that `det` becomes `+1` or `-1`.
    pub fn unimodular(&self) -> Option<Self> {
        let det = self.det();
        if det == T::zero() || !det.is_finite() {
            return None;
        }
        Some(self.scale(T::one() / det.abs().sqrt()))
    }

    /// Traceless part `M - (tr M / 2) I`.
    pub fn traceless_part(&self) -> Self {
        let h = self.trace() * T::half();
        Self::new(self.a - h, self.b, self.c, self.d - h)
    }

    /// `exp(M)` for a traceless `M`.
    ///
    /// Uses `M^2 = -det(M) I`, so `exp(M) = C I + S M` with
    /// `(C, S) = (cosh r, sinh r / r)` when `-det M = r^2 > 0` and
    /// `(cos r, sin r / r)` when `det M = r^2 > 0`.
    pub fn exp_traceless(&self) -> Self {
        let (c, s) = cosh_sinhc(-self.det());
        Self::new(c + s * self.a, s * self.b, s * self.c, c + s * self.d)
    }
}

/// `(C, S)` such that `exp(M) = C I + S M` whenever `M^2 = delta I`.
///
/// Continuous in `delta`; series are used close to zero.
pub(crate) fn cosh_sinhc<T: Scalar>(delta: T) -> (T, T) {
    let small = T::lit(1e-6);
    if delta.abs() < small {
        let c = T::one() + delta * T::half() + delta * delta / T::lit(24.0);
        let s = T::one() + delta / T::lit(6.0) + delta * delta / T::lit(120.0);
        (c, s)
    } else if delta > T::zero() {
        let r = delta.sqrt();
        (r.cosh(), r.sinh() / r)
    } else {
        let r = (-delta).sqrt();
        (r.cos(), r.sin() / r)
    }
}

/// `r / sinh r` as a function of `cosh r = h >= 1`, continued to
/// `r / sin r` for `cos r = h < 1`. This is the factor turning
/// `M - h I` into `log M` for `M` in SL(2, R) with `tr M = 2h`.
pub(crate) fn log_factor<T: Scalar>(h: T) -> T {
    let delta = h - T::one();
    if delta.abs() < T::lit(1e-8) {
        // r^2 ~ 2 delta; r / sinh r = 1 - r^2/6 + ...
        T::one() - delta / T::lit(3.0)
    } else if delta > T::zero() {
        let r = h.acosh();
        r / r.sinh()
    } else {
        let r = h.max(-T::one()).acos();
        r / r.sin()
    }
}

impl<T: Scalar> Mul for Mat2<T> {
    type Output = Self;

    fn mul(self, r: Self) -> Self {
        Self::new(
            self.a * r.a + self.b * r.c,
            self.a * r.b + self.b * r.d,
            self.c * r.a + self.d * r.c,
            self.c * r.b + self.d * r.d,
        )
    }
}

impl<T: Scalar> Add for Mat2<T> {
    type Output = Self;

    fn add(self, r: Self) -> Self {
        Self::new(self.a + r.a, self.b + r.b, self.c + r.c, self.d + r.d)
    }
}

impl<T: Scalar> Sub for Mat2<T> {
    type Output = Self;

    fn sub(self, r: Self) -> Self {
        Self::new(self.a - r.a, self.b - r.b, self.c - r.c, self.d - r.d)
    }
}

impl<T: Scalar> Neg for Mat2<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(-self.a, -self.b, -self.c, -self.d)
    }
}

pub(crate) fn mat4_mul_vec<T: Scalar>(m: &Mat4<T>, v: [T; 4]) -> [T; 4] {
    let mut out = [T::zero(); 4];
    for (o, row) in out.iter_mut().zip(m) {
        *o = row.iter().zip(&v).fold(T::zero(), |acc, (x, y)| acc + *x * *y);
    }
    out
}
