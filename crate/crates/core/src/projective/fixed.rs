use crate::eph::EphClass;
use crate::mat2::Mat2;
use crate::projective::moebius::MoebiusMap;
use crate::projective::point::ProjPoint;
use crate::scalar::{sign_with, Scalar};
use crate::tolerance::Tolerance;

/// Fixed points of a Möbius map and the class they determine.
#[derive(Debug, Clone, PartialEq)]
pub enum FixedPointReport<T> {
    /// The identity fixes every point.
    All,
    /// No real fixed point.
    Elliptic,
    /// A single (double) fixed point.
    Parabolic(ProjPoint<T>),
    /// Two fixed points, finite ones ascending and infinity last.
    Hyperbolic(ProjPoint<T>, ProjPoint<T>),
}

impl<T: Scalar> FixedPointReport<T> {
    /// Number of fixed points; `None` for the identity.
    pub fn count(&self) -> Option<usize> {
        match self {
            FixedPointReport::All => None,
            FixedPointReport::Elliptic => Some(0),
            FixedPointReport::Parabolic(_) => Some(1),
            FixedPointReport::Hyperbolic(..) => Some(2),
        }
    }

    pub fn points(&self) -> Vec<ProjPoint<T>> {
        match self {
            FixedPointReport::All | FixedPointReport::Elliptic => Vec::new(),
            FixedPointReport::Parabolic(p) => vec![*p],
            FixedPointReport::Hyperbolic(p, q) => vec![*p, *q],
        }
    }

    pub fn eph(&self) -> Option<EphClass> {
        match self {
            FixedPointReport::All => None,
            FixedPointReport::Elliptic => Some(EphClass::Elliptic),
            FixedPointReport::Parabolic(_) => Some(EphClass::Parabolic),
            FixedPointReport::Hyperbolic(..) => Some(EphClass::Hyperbolic),
        }
    }
}

/// Class of a determinant-one matrix from `tr^2 - 4`, with a guard band
/// of `eps_class` around the parabolic boundary.
pub fn classify_trace<T: Scalar>(trace: T, eps_class: T) -> EphClass {
    EphClass::from_sign(sign_with(trace * trace - T::lit(4.0), eps_class))
}

/// Kernel direction of `m - lambda I`, taken from the better conditioned row.
pub(crate) fn eigenvector<T: Scalar>(m: &Mat2<T>, lambda: T) -> [T; 2] {
    let r1 = [m.b, lambda - m.a];
    let r2 = [lambda - m.d, m.c];
    let n1 = r1[0].hypot(r1[1]);
    let n2 = r2[0].hypot(r2[1]);
    if n1 >= n2 {
        [r1[0] / n1, r1[1] / n1]
    } else {
        [r2[0] / n2, r2[1] / n2]
    }
}

fn ascending<T: Scalar>(x: ProjPoint<T>, y: ProjPoint<T>) -> (ProjPoint<T>, ProjPoint<T>) {
    if x.to_scalar() <= y.to_scalar() {
        (x, y)
    } else {
        (y, x)
    }
}

/// Fixed points of `g`, i.e. the projective roots of `c s^2 + (d - a) s - b`.
///
/// They are the eigenvectors of the matrix, so infinity is found without
/// special casing when `c = 0`.
pub fn fixed_points<T: Scalar>(g: &MoebiusMap<T>, tol: Tolerance<T>) -> FixedPointReport<T> {
    if g.is_identity(tol.eps) {
        return FixedPointReport::All;
    }
    let m = g.matrix();
    let tr = m.trace();
    match classify_trace(tr, tol.eps_class) {
        EphClass::Elliptic => FixedPointReport::Elliptic,
        EphClass::Parabolic => {
            let [p, q] = eigenvector(&m, tr * T::half());
            FixedPointReport::Parabolic(ProjPoint::canonical(p, q))
        }
        EphClass::Hyperbolic => {
            let root = (tr * tr - T::lit(4.0)).sqrt();
            let [p1, q1] = eigenvector(&m, (tr + root) * T::half());
            let [p2, q2] = eigenvector(&m, (tr - root) * T::half());
            let (x, y) = ascending(ProjPoint::canonical(p1, q1), ProjPoint::canonical(p2, q2));
            FixedPointReport::Hyperbolic(x, y)
        }
    }
}
