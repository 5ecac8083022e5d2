use crate::cycle::{isotropic_to_point, pairing, pairing_matrix, Cycle, IsotropicPoint};
use crate::eph::EphClass;
use crate::error::{degenerate, invalid, Result};
use crate::extension::interval::ExtensionPoint;
use crate::scalar::Scalar;

fn dot<T: Scalar>(a: &[T; 4], b: &[T; 4]) -> T {
    a.iter().zip(b).fold(T::zero(), |s, (x, y)| s + *x * *y)
}

fn norm<T: Scalar>(a: &[T; 4]) -> T {
    dot(a, a).sqrt()
}

fn axpy<T: Scalar>(s: T, x: &[T; 4], y: &[T; 4]) -> [T; 4] {
    [y[0] + s * x[0], y[1] + s * x[1], y[2] + s * x[2], y[3] + s * x[3]]
}

/// Removes the components along the orthonormal `basis`.
fn project_out<T: Scalar>(v: [T; 4], basis: &[[T; 4]]) -> [T; 4] {
    basis.iter().fold(v, |v, b| axpy(-dot(&v, b), b, &v))
}

/// Orthonormal basis of the vectors orthogonal to `rows`, by
/// Gram-Schmidt with pivoting over the coordinate axes.
fn complement<T: Scalar>(rows: &[[T; 4]], eps: T) -> Result<Vec<[T; 4]>> {
    let mut basis: Vec<[T; 4]> = Vec::new();
    for r in rows {
        let v = project_out(*r, &basis);
        let n = norm(&v);
        if n <= eps * norm(r) {
            return Err(invalid("cycles are proportional"));
        }
        basis.push(v.map(|t| t / n));
    }
    let mut out = Vec::new();
    while basis.len() < 4 {
        let best = (0..4)
            .map(|i| {
                let mut e = [T::zero(); 4];
                e[i] = T::one();
                project_out(e, &basis)
            })
            .max_by(|a, b| norm(a).partial_cmp(&norm(b)).unwrap_or(std::cmp::Ordering::Equal))
            .expect("four axes");
        let n = norm(&best);
        let v = best.map(|t| t / n);
        basis.push(v);
        out.push(v);
    }
    Ok(out)
}

/// All τ-isotropic forms `Ĉ` e-orthogonal to both cycles.
///
/// The two linear conditions leave a pencil `α U + β V`; isotropy is the
/// binary quadratic `P₁₁α² + 2P₁₂αβ + P₂₂β² = 0` in `(α : β)`. Returns zero,
/// one (tangency) or two forms, each scaled to unit Euclidean norm.
pub fn common_point_forms<T: Scalar>(c: &Cycle<T>, ct: &Cycle<T>, tau: EphClass, eps: T) -> Result<Vec<Cycle<T>>> {
    let j = pairing_matrix::<T>(EphClass::Elliptic);
    let row = |q: &Cycle<T>| {
        let v = q.vector();
        let mut r = [T::zero(); 4];
        for (i, ri) in r.iter_mut().enumerate() {
            *ri = dot(&j[i], &v);
        }
        r
    };
    let basis = complement(&[row(c), row(ct)], eps)?;
    let u = Cycle::from_vector(basis[0])?;
    let v = Cycle::from_vector(basis[1])?;
    let (p11, p12, p22) = (pairing(&u, &u, tau), pairing(&u, &v, tau), pairing(&v, &v, tau));
    let scale = p11.abs().max(p12.abs()).max(p22.abs());
    if scale <= eps {
        return Err(degenerate("every cycle of the pencil is isotropic"));
    }
    let disc = p12 * p12 - p11 * p22;
    if disc < -eps * scale * scale {
        return Ok(Vec::new());
    }
    let root = disc.max(T::zero()).sqrt();
    let sign = if p12 >= T::zero() { T::one() } else { -T::one() };
    let q = -(p12 + sign * root);
    // Roots of the binary quadratic without cancellation.
    let pairs = if p11.abs() >= p22.abs() { [(q, p11), (p22, q)] } else { [(p22, q), (q, p11)] };
    let mut forms: Vec<Cycle<T>> = Vec::new();
    for (a, b) in pairs {
        let w = axpy(b, &basis[1], &basis[0].map(|t| t * a));
        let n = norm(&w);
        if n <= eps {
            continue;
        }
        let f = Cycle::from_vector(w.map(|t| t / n))?;
        if !forms.iter().any(|g| g.approx_eq(&f, eps.sqrt())) {
            forms.push(f);
        }
    }
    Ok(forms)
}

/// Common points of two cycles in the τ-geometry.
///
/// Points at infinity and points below the real line are dropped; a
/// point within `eps` of the axis is reported with `v = 0`.
pub fn common_points<T: Scalar>(c: &Cycle<T>, ct: &Cycle<T>, tau: EphClass, eps: T) -> Result<Vec<ExtensionPoint<T>>> {
    let mut out: Vec<ExtensionPoint<T>> = Vec::new();
    for f in common_point_forms(c, ct, tau, eps)? {
        let (u, v) = match isotropic_to_point(&f, tau, eps.sqrt())? {
            IsotropicPoint::Finite { u, v } => (u, v),
            IsotropicPoint::AtInfinity => continue,
        };
        if v < -eps * u.abs().max(T::one()) {
            continue;
        }
        let p = ExtensionPoint::new(u, v.max(T::zero()), tau)?;
        let tol = eps.sqrt() * u.abs().max(v).max(T::one());
        if !out.iter().any(|o| o.approx_eq(&p, tol)) {
            out.push(p);
        }
    }
    out.sort_by(|a, b| a.u.partial_cmp(&b.u).unwrap_or(std::cmp::Ordering::Equal));
    Ok(out)
}
