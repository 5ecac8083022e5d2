use crate::error::{invalid, Result};
use crate::mat2::Mat2;
use crate::projective::subgroups::{a_subgroup, k_subgroup, n_subgroup};
use crate::scalar::Scalar;

/// Factorisation `g = g_A g_N g_K` with its subgroup parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Iwasawa<T> {
    /// `g_A = diag(e^-a, e^a)`.
    pub a: T,
    /// `g_N = [[1, n], [0, 1]]`.
    pub n: T,
    /// `g_K` is the rotation by `k`.
    pub k: T,
}

impl<T: Scalar> Iwasawa<T> {
    pub fn g_a(&self) -> Mat2<T> {
        a_subgroup(self.a)
    }

    pub fn g_n(&self) -> Mat2<T> {
        n_subgroup(self.n)
    }

    pub fn g_k(&self) -> Mat2<T> {
        k_subgroup(self.k)
    }

    pub fn product(&self) -> Mat2<T> {
        self.g_a() * self.g_n() * self.g_k()
    }
}

/// Iwasawa decomposition of a matrix in SL(2, R).
///
/// The bottom row of `g` equals `r (sin k, cos k)` with `r = e^a`, so
/// `r = |(c, d)|`, `k = atan2(c, d)` and `n = ac + bd`. Inputs with
/// positive determinant other than one are first scaled to SL(2, R);
/// the sign of `g` is kept, so `g` and `-g` decompose differently.
pub fn iwasawa<T: Scalar>(g: &Mat2<T>) -> Result<Iwasawa<T>> {
    let g = match g.unimodular() {
        Some(m) if g.det() > T::zero() => m,
        _ => return Err(invalid("Iwasawa decomposition needs a positive determinant")),
    };
    let r = g.c.hypot(g.d);
    Ok(Iwasawa { a: r.ln(), n: g.a * g.c + g.b * g.d, k: g.c.atan2(g.d) })
}
