use crate::error::{invalid, GeometryError, Result};
use crate::mat2::Mat2;
use crate::projective::moebius::MoebiusMap;
use crate::projective::point::ProjPoint;
use crate::scalar::Scalar;

/// Cyclic orientation of three distinct points of the projective line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Positive,
    Negative,
}

impl Orientation {
    pub fn flipped(self) -> Self {
        match self {
            Orientation::Positive => Orientation::Negative,
            Orientation::Negative => Orientation::Positive,
        }
    }
}

/// Three pairwise distinct points `(x1, x2, x3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrientedTriple<T> {
    points: [ProjPoint<T>; 3],
}

impl<T: Scalar> OrientedTriple<T> {
    /// Fails when two points coincide projectively within `eps`.
    pub fn new(x1: ProjPoint<T>, x2: ProjPoint<T>, x3: ProjPoint<T>, eps: T) -> Result<Self> {
        let points = [x1, x2, x3];
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            if points[i].approx_eq(&points[j], eps) {
                return Err(invalid(format!("triple points x{} and x{} coincide ({})", i + 1, j + 1, points[i])));
            }
        }
        Ok(Self { points })
    }

    /// Convenience constructor from affine values, `±inf` meaning infinity.
    pub fn from_values(x1: T, x2: T, x3: T, eps: T) -> Result<Self> {
        Self::new(ProjPoint::from_scalar(x1)?, ProjPoint::from_scalar(x2)?, ProjPoint::from_scalar(x3)?, eps)
    }

    pub fn points(&self) -> [ProjPoint<T>; 3] {
        self.points
    }

    pub fn orientation(&self) -> Orientation {
        orientation(self)
    }

    /// Image under an invertible matrix (orientation-reversing allowed).
    pub fn map(&self, m: &Mat2<T>) -> Result<Self> {
        let [a, b, c] = self.points;
        Ok(Self {
            points: [
                crate::projective::moebius::apply_map(m, &a)?,
                crate::projective::moebius::apply_map(m, &b)?,
                crate::projective::moebius::apply_map(m, &c)?,
            ],
        })
    }
}

fn cross<T: Scalar>(x: [T; 2], y: [T; 2]) -> T {
    x[0] * y[1] - x[1] * y[0]
}

/// Orientation via the sign of `(x1 - x2)(x2 - x3)(x3 - x1)`.
///
/// Evaluated in homogeneous coordinates, where each factor becomes the
/// 2x2 determinant `p_i q_j - p_j q_i`. Every point occurs in two factors,
/// so the sign is projectively well defined, and at `∞ = [1:0]` it agrees
/// with treating infinity as larger than every real number.
pub fn orientation<T: Scalar>(t: &OrientedTriple<T>) -> Orientation {
    let [a, b, c] = t.points;
    if orientation_value(&a, &b, &c) > T::zero() {
        Orientation::Positive
    } else {
        Orientation::Negative
    }
}

/// Signed product behind [`orientation`] for arbitrary, possibly
/// coincident, points; zero when two of them coincide.
pub(crate) fn orientation_value<T: Scalar>(x: &ProjPoint<T>, y: &ProjPoint<T>, z: &ProjPoint<T>) -> T {
    let [a, b, c] = [x.unit(), y.unit(), z.unit()];
    cross(a, b) * cross(b, c) * cross(c, a)
}

/// Matrix in SL(2, R) sending a positively oriented triple to `(0, 1, ∞)`.
///
/// Built as `g''' g'' g'` with `g'` a rotation moving `x3` to infinity,
/// `g''` a translation moving the image of `x1` to zero and `g'''` a
/// diagonal scaling moving the image of `x2` to one.
pub fn map_to_standard<T: Scalar>(x: &OrientedTriple<T>) -> Result<Mat2<T>> {
    if x.orientation() != Orientation::Positive {
        return Err(GeometryError::Orientation("standard form needs a positively oriented triple".into()));
    }
    let [x1, x2, x3] = x.points;
    // cot t = x3 in homogeneous form; x3 = ∞ gives the identity.
    let [c, s] = x3.unit();
    let g1 = Mat2::new(c, s, -s, c);
    let x1p = apply(&g1, &x1);
    let shift = -x1p[0] / x1p[1];
    let g2 = Mat2::new(T::one(), shift, T::zero(), T::one());
    let g21 = g2 * g1;
    let x2pp = apply(&g21, &x2);
    let ratio = x2pp[0] / x2pp[1];
    if !(ratio > T::zero() && ratio.is_finite()) {
        return Err(GeometryError::Degenerate("triple too close to degenerate for the standard map".into()));
    }
    let a = ratio.sqrt();
    let g3 = Mat2::diag(T::one() / a, a);
    Ok(g3 * g21)
}

fn apply<T: Scalar>(m: &Mat2<T>, x: &ProjPoint<T>) -> [T; 2] {
    m.apply_vec(x.homogeneous())
}

/// The reflection `x -> -x`, i.e. the cycle `C_{0∞}` with determinant -1.
pub fn reflection<T: Scalar>() -> Mat2<T> {
    Mat2::diag(T::one(), -T::one())
}

/// The unique Möbius map `φ` with `φ(x_j) = y_j`, `j = 1, 2, 3`.
///
/// Both triples must share an orientation. Negatively oriented pairs are
/// handled by conjugating with the reflection `x -> -x`.
pub fn map_between_triples<T: Scalar>(x: &OrientedTriple<T>, y: &OrientedTriple<T>) -> Result<MoebiusMap<T>> {
    let (ox, oy) = (x.orientation(), y.orientation());
    if ox != oy {
        return Err(GeometryError::Orientation(
            "triples have opposite orientations; compose with the reflection x -> -x".into(),
        ));
    }
    let m = if ox == Orientation::Positive {
        standard_pair(x, y)?
    } else {
        let r = reflection();
        r * standard_pair(&x.map(&r)?, &y.map(&r)?)? * r
    };
    MoebiusMap::from_matrix(m)
}

/// Möbius map `φ` with `φ(-x_j) = y_j` for triples of opposite orientation.
pub fn map_between_opposite_triples<T: Scalar>(x: &OrientedTriple<T>, y: &OrientedTriple<T>) -> Result<MoebiusMap<T>> {
    map_between_triples(&x.map(&reflection())?, y)
}

fn standard_pair<T: Scalar>(x: &OrientedTriple<T>, y: &OrientedTriple<T>) -> Result<Mat2<T>> {
    let gx = map_to_standard(x)?;
    let gy = map_to_standard(y)?;
    Ok(gy.adjugate() * gx)
}
