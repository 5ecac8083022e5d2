//! Command implementations returning the text printed on stdout.

use poincare_core::extension::{
    common_points, discriminant_classify, extend_triple, extension_point_elliptic, extension_point_hyperbolic,
    extension_point_parabolic, subgroup_from_triple,
};
use poincare_core::projective::{fixed_points, iwasawa as iwasawa_factor, map_between_triples};
use poincare_core::{ExtensionPoint, Mat2, ProjPoint, Tolerance};
use serde_json::{json, Value};

use crate::doc::Document;
use crate::error::{CliError, Result};
use crate::format::{fixed6, to_report};
use crate::scene::{default_n_ratio, interval_cycle, Scene};
use crate::svg::render;

/// Which closed form `point` evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum PointKind {
    Ell,
    Par,
    Hyp,
}

fn proj(p: &ProjPoint<f64>) -> Value {
    match p.value() {
        Some(x) => json!(x),
        None => json!("inf"),
    }
}

fn matrix(m: &Mat2<f64>) -> Value {
    json!(m.rows())
}

fn point(p: &ExtensionPoint<f64>) -> Value {
    json!({"u": p.u, "v": p.v})
}

/// Discriminant, class, the map `φ_XY`, its fixed points and the flow
/// times of the triple.
pub fn classify(doc: &Document, tol: Tolerance<f64>) -> Result<String> {
    let t = doc.triple(tol.eps)?;
    let (value, class) = discriminant_classify(&t, tol.eps_class);
    let phi = map_between_triples(&t.xs(), &t.ys())?;
    let fixed = fixed_points(&phi, tol);
    let (_, t2, t3) = subgroup_from_triple(&t, tol)?;
    Ok(to_report(&json!({
        "class": class.name(),
        "tau": class.tau(),
        "discriminant": value,
        "map": matrix(&phi.matrix()),
        "fixed_points": fixed.points().iter().map(proj).collect::<Vec<_>>(),
        "t2": t2,
        "t3": t3,
    })))
}

/// τ, the invariant isotropic form and the point it represents.
pub fn extend(doc: &Document, tol: Tolerance<f64>) -> Result<String> {
    let e = extend_triple(&doc.triple(tol.eps)?, tol)?;
    let f = e.form;
    Ok(to_report(&json!({
        "class": e.tau.name(),
        "tau": e.tau.tau(),
        "discriminant": e.discriminant,
        "t2": e.t2,
        "t3": e.t3,
        "form": {"n": f.n, "l": f.l, "k": f.k, "m": f.m},
        "point": e.point.as_ref().map_or(json!("at infinity"), point),
    })))
}

/// `u v` of the closed-form point.
pub fn closed_point(kind: PointKind, [x, y, xp, yp]: [f64; 4]) -> Result<String> {
    let p = match kind {
        PointKind::Ell => extension_point_elliptic(x, y, xp, yp)?,
        PointKind::Par => extension_point_parabolic(x, y, xp, yp)?,
        PointKind::Hyp => extension_point_hyperbolic(x, y, xp, yp)?,
    };
    Ok(format!("{} {}", fixed6(p.u), fixed6(p.v)))
}

/// The SVG of the scene described by the document.
pub fn plot(doc: &Document, tol: Tolerance<f64>, samples: usize) -> Result<String> {
    if samples < 2 {
        return Err(CliError::schema("--samples must be at least 2"));
    }
    Ok(render(&Scene::from_document(doc, tol)?, samples))
}

/// Iwasawa factors of a matrix with positive determinant.
pub fn iwasawa(m: [f64; 4]) -> Result<String> {
    let f = iwasawa_factor(&Mat2::new(m[0], m[1], m[2], m[3]))?;
    Ok(to_report(&json!({
        "a": f.a,
        "n": f.n,
        "k": f.k,
        "g_a": matrix(&f.g_a()),
        "g_n": matrix(&f.g_n()),
        "g_k": matrix(&f.g_k()),
    })))
}

/// Common points of the first two curves of the document.
pub fn common(doc: &Document, tol: Tolerance<f64>) -> Result<String> {
    let tau = doc.eph()?.ok_or_else(|| CliError::schema("common-points needs an explicit tau"))?;
    let ratio = doc.n_ratio.unwrap_or_else(|| default_n_ratio(tau));
    let mut cycles = doc.interval_list()?.iter().map(|i| interval_cycle(i, ratio)).collect::<Result<Vec<_>>>()?;
    cycles.extend(doc.cycle_list()?);
    let [a, b] = cycles[..] else {
        return Err(CliError::schema(format!("expected exactly 2 intervals or cycles, got {}", cycles.len())));
    };
    let pts = common_points(&a, &b, tau, tol.eps)?;
    Ok(to_report(&json!({
        "class": tau.name(),
        "tau": tau.tau(),
        "points": pts.iter().map(point).collect::<Vec<_>>(),
    })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use poincare_core::GeometryError;

    fn doc(text: &str) -> Document {
        Document::parse(text).unwrap()
    }

    #[test]
    fn classify_canonical_triples() {
        let tol = Tolerance::default();
        let r = classify(&doc(r#"{"intervals": [[0, 1], [1, 2], [2, 3]]}"#), tol).unwrap();
        assert!(r.contains(r#""class":"parabolic""#) && r.contains(r#""discriminant":0.000000"#), "{r}");
        assert!(r.contains(r#""fixed_points":["inf"]"#), "{r}");
        let r = classify(&doc(r#"{"intervals": [[1, 2], [2, 4], [4, 8]]}"#), tol).unwrap();
        assert!(r.contains(r#""class":"hyperbolic""#), "{r}");
    }

    #[test]
    fn misaligned_triple_is_a_math_error() {
        let err = classify(&doc(r#"{"intervals": [[0, 1], [1, 3], [2, 2.5]]}"#), Tolerance::default()).unwrap_err();
        assert!(matches!(err, CliError::Math(GeometryError::Orientation(_))));
        assert_eq!(err.exit_code(), 3);
        assert!(err.to_string().starts_with("orientation mismatch"));
    }

    #[test]
    fn extend_reports_points() {
        let tol = Tolerance::default();
        let r = extend(&doc(r#"{"intervals": [[0, -1], [1, 0], ["inf", 1]]}"#), tol).unwrap();
        assert!(r.contains(r#""point":{"u":0.000000,"v":1.000000}"#), "{r}");
        assert!(r.contains(r#""tau":-1"#));
        let r = extend(&doc(r#"{"intervals": [[0, 1], [1, 2], [2, 3]]}"#), tol).unwrap();
        assert!(r.contains(r#""point":"at infinity""#), "{r}");
    }

    #[test]
    fn closed_points() {
        assert_eq!(closed_point(PointKind::Ell, [0.0, 2.0, 1.0, 3.0]).unwrap(), "1.500000 0.866025");
        assert_eq!(closed_point(PointKind::Hyp, [0.0, 1.0, 2.0, 3.0]).unwrap(), "1.500000 0.866025");
        assert_eq!(closed_point(PointKind::Par, [0.0, 2.0, 1.0, 4.0]).unwrap(), "1.464102 0.392305");
        assert_eq!(closed_point(PointKind::Ell, [0.0, 1.0, 2.0, 3.0]).unwrap_err().exit_code(), 3);
    }

    #[test]
    fn iwasawa_report() {
        let r = iwasawa([2.0, 1.0, 1.0, 1.0]).unwrap();
        assert!(r.contains(r#""g_n":[[1.000000,"#), "{r}");
        assert!(iwasawa([1.0, 2.0, 2.0, 1.0]).is_err());
    }

    #[test]
    fn common_points_of_two_intervals() {
        let r = common(&doc(r#"{"tau": 1, "intervals": [[0, 1], [2, 3]]}"#), Tolerance::default()).unwrap();
        assert_eq!(r, r#"{"class":"hyperbolic","points":[{"u":1.500000,"v":0.866025}],"tau":1}"#);
        let err = common(&doc(r#"{"tau": 1, "intervals": [[0, 1]]}"#), Tolerance::default()).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }
}
