use crate::eph::EphClass;
use crate::extension::interval::{AlignedTriple, Interval};
use crate::scalar::{sign_with, Scalar};

fn det3<T: Scalar>(m: [[T; 3]; 3]) -> T {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Coefficients `(A, B, C)` of the fixed-point equation `A s² + B s t + C t² = 0`
/// of the map sending each `x_j` to `y_j`, in homogeneous `s = [s : t]`.
///
/// A map `[[a, b], [c, d]]` with `x ↦ y` satisfies `ax + b - cxy - dy = 0`.
/// Written homogeneously, the three conditions give rows
/// `(x₁y₂, x₂y₂, -x₁y₁, -x₂y₁)`; appending the row of the unknown fixed
/// point and expanding along it yields the quadratic.
pub fn fixed_point_quadratic<T: Scalar>(intervals: &[Interval<T>; 3], unit: bool) -> [T; 3] {
    let rows = intervals.map(|i| {
        let ([x1, x2], [y1, y2]) = if unit { (i.x.unit(), i.y.unit()) } else { (i.x.homogeneous(), i.y.homogeneous()) };
        [x1 * y2, x2 * y2, -(x1 * y1), -(x2 * y1)]
    });
    let minor = |skip: usize| {
        let pick = |r: &[T; 4]| {
            let mut out = [T::zero(); 3];
            let mut k = 0;
            for (j, v) in r.iter().enumerate() {
                if j != skip {
                    out[k] = *v;
                    k += 1;
                }
            }
            out
        };
        det3([pick(&rows[0]), pick(&rows[1]), pick(&rows[2])])
    };
    // Cofactors along the appended row (s₁s₂, s₂², -s₁², -s₁s₂).
    let c1 = -minor(0);
    let c2 = minor(1);
    let c3 = -minor(2);
    let c4 = minor(3);
    [-c3, c1 - c4, c2]
}

/// Discriminant of the fixed-point equation; for finite endpoints this is
/// `det(1, x y, y - x)² - 4 det(x, 1, y) det(x, -x y, y)` over the three rows.
pub fn discriminant_value<T: Scalar>(intervals: &[Interval<T>; 3]) -> T {
    let [a, b, c] = fixed_point_quadratic(intervals, false);
    b * b - T::lit(4.0) * a * c
}

/// Value of the discriminant and the class its sign selects: negative
/// is elliptic (no fixed point), zero parabolic, positive hyperbolic.
///
/// The sign is decided on unit-normalised homogeneous coordinates, with
/// the quadratic itself scaled to unit norm. Both rescale the value by a
/// positive factor, so `eps_class` is independent of the magnitude of the
/// endpoints and of how close the three rows are to being dependent.
pub fn discriminant_classify<T: Scalar>(t: &AlignedTriple<T>, eps_class: T) -> (T, EphClass) {
    let intervals = t.intervals();
    let [a, b, c] = fixed_point_quadratic(&intervals, true);
    let size = a * a + b * b + c * c;
    let unit = if size > T::zero() { (b * b - T::lit(4.0) * a * c) / size } else { T::zero() };
    let class = EphClass::from_sign(sign_with(unit, eps_class));
    let value = if class == EphClass::Parabolic { T::zero() } else { discriminant_value(&intervals) };
    (value, class)
}
