use std::fmt;

use crate::error::{invalid, Result};
use crate::mat2::{mat4_mul_vec, Mat2, Mat4};
use crate::projective::{eigenvector, MoebiusMap, ProjPoint};
use crate::scalar::Scalar;

/// Bilinear form with matrix `[[l + n, -m], [k, -l + n]]`, coordinates
/// `(n, l, k, m)`.
///
/// Cycles are projective: `Q` and `λQ` describe the same object. The
/// zero-trace case `n = 0` with non-positive determinant is a pair of
/// points of the real line, see [`Cycle::from_endpoints`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cycle<T> {
    pub n: T,
    pub l: T,
    pub k: T,
    pub m: T,
}

impl<T: Scalar> Cycle<T> {
    pub fn new(n: T, l: T, k: T, m: T) -> Result<Self> {
        let c = Self { n, l, k, m };
        if !c.vector().iter().all(|x| x.is_finite()) {
            return Err(invalid("cycle coefficients must be finite"));
        }
        if c.vector().iter().all(|x| *x == T::zero()) {
            return Err(invalid("the zero form is not a cycle"));
        }
        Ok(c)
    }

    /// Unchecked constructor for values produced by invertible operations.
    pub(crate) fn raw(n: T, l: T, k: T, m: T) -> Self {
        Self { n, l, k, m }
    }

    pub fn from_vector(v: [T; 4]) -> Result<Self> {
        Self::new(v[0], v[1], v[2], v[3])
    }

    pub fn vector(&self) -> [T; 4] {
        [self.n, self.l, self.k, self.m]
    }

    /// Reads `(n, l, k, m)` off an arbitrary 2x2 matrix.
    pub fn from_matrix(q: &Mat2<T>) -> Result<Self> {
        let h = T::half();
        Self::new((q.a + q.d) * h, (q.a - q.d) * h, q.c, -q.b)
    }

    pub fn matrix(&self) -> Mat2<T> {
        Mat2::new(self.l + self.n, -self.m, self.k, -self.l + self.n)
    }

    pub fn det(&self) -> T {
        self.matrix().det()
    }

    /// Euclidean norm of `(n, l, k, m)`.
    pub fn norm(&self) -> T {
        let [n, l, k, m] = self.vector();
        (n * n + l * l + k * k + m * m).sqrt()
    }

    pub fn scale(&self, s: T) -> Self {
        Self::raw(self.n * s, self.l * s, self.k * s, self.m * s)
    }

    /// `(n, l, k, m) -> (λn, l, k, m)`; commutes with the SL(2, R) action.
    pub fn scale_n(&self, lambda: T) -> Self {
        Self::raw(self.n * lambda, self.l, self.k, self.m)
    }

    /// Scales the first of `k, l, n, m` exceeding `eps` in magnitude to one.
    pub fn normalized(&self, eps: T) -> Self {
        let pivot = [self.k, self.l, self.n, self.m].into_iter().find(|x| x.abs() > eps).unwrap_or_else(|| self.norm());
        self.scale(T::one() / pivot)
    }

    /// Equality up to a non-zero factor.
    pub fn approx_eq(&self, other: &Self, eps: T) -> bool {
        let (a, b) = (self.norm(), other.norm());
        let x = self.vector().map(|t| t / a);
        let y = other.vector().map(|t| t / b);
        let same = x.iter().zip(&y).all(|(p, q)| (*p - *q).abs() <= eps);
        let opposite = x.iter().zip(&y).all(|(p, q)| (*p + *q).abs() <= eps);
        same || opposite
    }

    /// `C_xy = ½ M_xy 𝔦(M_xy)`, with `M_xy` the matrix of columns `x`, `y`.
    ///
    /// For finite points this is `[[(x+y)/2, -xy], [1, -(x+y)/2]]`.
    /// Scaling the homogeneous coordinates of `x` and `y` by `λ`, `μ`
    /// scales the result by `λμ`.
    pub fn from_endpoints(x: &ProjPoint<T>, y: &ProjPoint<T>) -> Self {
        let [x1, x2] = x.homogeneous();
        let [y1, y2] = y.homogeneous();
        let m = Mat2::new(x1, y1, x2, y2);
        let c = (m * i_map(&m)).scale(T::half());
        Self::raw((c.a + c.d) * T::half(), (c.a - c.d) * T::half(), c.c, -c.b)
    }

    /// Recovers `{x, y}` from a zero-trace form with non-positive determinant.
    ///
    /// The endpoints are the eigenvectors of the matrix, which for `k ≠ 0`
    /// are `(l ± sqrt(l^2 - km)) / k`; for `k = 0` one endpoint is infinity.
    /// Returns `None` when the trace or the determinant rule out a point pair.
    pub fn endpoints(&self, eps: T) -> Option<(ProjPoint<T>, ProjPoint<T>)> {
        let scale = self.norm();
        if self.n.abs() > eps * scale {
            return None;
        }
        let q = Mat2::new(self.l, -self.m, self.k, -self.l);
        let disc = self.l * self.l - self.k * self.m;
        if disc < -eps * scale * scale {
            return None;
        }
        let lambda = disc.max(T::zero()).sqrt();
        let [p1, q1] = eigenvector(&q, lambda);
        let [p2, q2] = eigenvector(&q, -lambda);
        let x = ProjPoint::canonical(p1, q1);
        let y = ProjPoint::canonical(p2, q2);
        Some(if x.to_scalar() <= y.to_scalar() { (x, y) } else { (y, x) })
    }

    /// Similarity `g Q g⁻¹` by an invertible matrix.
    pub fn conjugate_by(&self, g: &Mat2<T>) -> Self {
        let c = *g * self.matrix() * g.adjugate();
        let det = g.det();
        let h = T::half() / det;
        Self::raw((c.a + c.d) * h, (c.a - c.d) * h, c.c / det, -c.b / det)
    }

    pub fn apply_linear(&self, t: &Mat4<T>) -> Self {
        let [n, l, k, m] = mat4_mul_vec(t, self.vector());
        Self::raw(n, l, k, m)
    }
}

impl<T: Scalar> fmt::Display for Cycle<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, l={}, k={}, m={})", self.n, self.l, self.k, self.m)
    }
}

/// `[[x1, y1], [x2, y2]] -> [[y2, -y1], [x2, -x1]]`.
///
/// Sends columns to rows so that `𝔦(g M) = 𝔦(M) adj(g)`: left
/// multiplication by `g` becomes right multiplication by `det(g) g⁻¹`.
pub fn i_map<T: Scalar>(m: &Mat2<T>) -> Mat2<T> {
    Mat2::new(m.d, -m.b, m.c, -m.a)
}

/// `g Q g⁻¹` for a Möbius map, repacked into `(n, l, k, m)`.
pub fn conjugate<T: Scalar>(g: &MoebiusMap<T>, q: &Cycle<T>) -> Cycle<T> {
    q.conjugate_by(&g.matrix())
}

/// 4x4 matrix acting on `(n, l, k, m)` like conjugation by `g`.
pub fn linear_action_matrix<T: Scalar>(g: &MoebiusMap<T>) -> Mat4<T> {
    let Mat2 { a, b, c, d } = g.matrix();
    let (o, z, two) = (T::one(), T::zero(), T::two());
    [[o, z, z, z], [z, c * b + a * d, b * d, c * a], [z, two * c * d, d * d, c * c], [z, two * a * b, b * b, a * a]]
}
