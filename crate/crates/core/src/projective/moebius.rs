use std::fmt;
use std::ops::Mul;

use crate::error::{invalid, Result};
use crate::mat2::Mat2;
use crate::projective::point::ProjPoint;
use crate::scalar::Scalar;
use crate::tolerance::DEFAULT_EPS;

/// Applies any invertible real 2x2 matrix to a point of the projective line.
///
/// Matrices with negative determinant are admitted; they act as
/// orientation-reversing maps (for example the reflection `x -> -x`).
pub fn apply_map<T: Scalar>(m: &Mat2<T>, x: &ProjPoint<T>) -> Result<ProjPoint<T>> {
    if !m.is_finite() {
        return Err(invalid("matrix entries must be finite"));
    }
    if m.det() == T::zero() {
        return Err(invalid("matrix is singular"));
    }
    let [p, q] = m.apply_vec(x.homogeneous());
    Ok(ProjPoint::canonical(p, q))
}

/// Element of PSL(2, R) acting by linear-fractional maps.
///
/// The stored matrix has determinant one, non-negative trace and, when the
/// trace vanishes, `c > 0` or `c = 0, b > 0`. Since `g` and `-g` induce the
/// same map this picks one representative per map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MoebiusMap<T> {
    m: Mat2<T>,
}

pub(crate) fn canon_eps<T: Scalar>() -> T {
    T::lit(DEFAULT_EPS).max(T::lit(100.0) * T::epsilon())
}

impl<T: Scalar> MoebiusMap<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Result<Self> {
        Self::from_matrix(Mat2::new(a, b, c, d))
    }

    /// Normalises a matrix with positive determinant.
    pub fn from_matrix(m: Mat2<T>) -> Result<Self> {
        if !m.is_finite() {
            return Err(invalid("matrix entries must be finite"));
        }
        let det = m.det();
        if det <= T::zero() {
            return Err(invalid("a Möbius map needs a positive determinant"));
        }
        Ok(Self::canonicalize(m.scale(T::one() / det.sqrt())))
    }

    fn canonicalize(m: Mat2<T>) -> Self {
        let eps = canon_eps::<T>() * m.max_abs().max(T::one());
        let tr = m.trace();
        let flip = if tr.abs() > eps {
            tr < T::zero()
        } else if m.c.abs() > eps {
            m.c < T::zero()
        } else {
            m.b < T::zero()
        };
        Self { m: if flip { -m } else { m } }
    }

    pub fn identity() -> Self {
        Self { m: Mat2::identity() }
    }

    pub fn matrix(&self) -> Mat2<T> {
        self.m
    }

    pub fn trace(&self) -> T {
        self.m.trace()
    }

    pub fn apply(&self, x: &ProjPoint<T>) -> ProjPoint<T> {
        let [p, q] = self.m.apply_vec(x.homogeneous());
        ProjPoint::canonical(p, q)
    }

    pub fn inverse(&self) -> Self {
        Self::canonicalize(self.m.adjugate())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self::canonicalize(self.m * other.m)
    }

    pub fn approx_eq(&self, other: &Self, eps: T) -> bool {
        self.m.approx_eq(&other.m, eps) || self.m.approx_eq(&-other.m, eps)
    }

    pub fn is_identity(&self, eps: T) -> bool {
        self.approx_eq(&Self::identity(), eps)
    }
}

impl<T: Scalar> Mul for MoebiusMap<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        self.compose(&rhs)
    }
}

impl<T: Scalar> fmt::Display for MoebiusMap<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.m;
        write!(f, "[[{}, {}], [{}, {}]]", m.a, m.b, m.c, m.d)
    }
}
