use crate::cycle::form::Cycle;
use crate::eph::PairingSignature;
use crate::scalar::Scalar;

/// Plane quadric `k(u² - τv²) - 2lu - 2nv + m = 0` attached to a cycle.
///
/// `(u, v)` lies on the curve exactly when the cycle is e-orthogonal to
/// the τ-isotropic form of `(u, v)`. For `τ = -1, 0, 1` these are circles,
/// parabolas with vertical axis and equilateral hyperbolas.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticCurve<T> {
    pub k: T,
    pub l: T,
    pub n: T,
    pub m: T,
    pub tau: PairingSignature,
}

impl<T: Scalar> QuadraticCurve<T> {
    pub fn residual(&self, u: T, v: T) -> T {
        let two = T::two();
        self.k * (u * u - self.tau.value::<T>() * v * v) - two * self.l * u - two * self.n * v + self.m
    }

    /// Residual relative to the size of the individual terms.
    pub fn contains(&self, u: T, v: T, eps: T) -> bool {
        let two = T::two();
        let size = self.k.abs() * (u * u + v * v) + two * (self.l * u).abs() + two * (self.n * v).abs() + self.m.abs();
        self.residual(u, v).abs() <= eps * size.max(T::one())
    }

    pub fn cycle(&self) -> Option<Cycle<T>> {
        Cycle::new(self.n, self.l, self.k, self.m).ok()
    }
}

pub fn curve_from_cycle<T: Scalar>(q: &Cycle<T>, tau: PairingSignature) -> QuadraticCurve<T> {
    QuadraticCurve { k: q.k, l: q.l, n: q.n, m: q.m, tau }
}
