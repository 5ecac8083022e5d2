//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on
//! any failure. Reference values come from oracles written out here
//! rather than from the engine.

use std::path::Path;
use std::process::{Command, ExitCode};

use poincare_cli::{Document, Scene};
use poincare_core::cycle::{conjugate, pairing, Cycle};
use poincare_core::extension::{
    discriminant_classify, extend_triple, extension_point_elliptic, extension_point_hyperbolic,
    extension_point_parabolic, orthogonal_form_through, real_line_fraction, subgroup_from_triple, AlignedTriple,
    Interval,
};
use poincare_core::projective::subgroups::h_tau;
use poincare_core::projective::{fixed_points, iwasawa, map_between_triples, Orientation, OrientedTriple};
use poincare_core::{EphClass, Mat2, MoebiusMap, ProjPoint, Tolerance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Random element of SL(2, R) from independent entries, `d = (1 + bc) / a`.
fn random_sl2(r: &mut ChaCha8Rng) -> Mat2<f64> {
    loop {
        let (a, b, c): (f64, f64, f64) = (r.gen_range(-2.0..2.0), r.gen_range(-2.0..2.0), r.gen_range(-2.0..2.0));
        if a.abs() > 0.3 {
            return Mat2::new(a, b, c, (1.0 + b * c) / a);
        }
    }
}

fn apply(m: &Mat2<f64>, x: f64) -> ProjPoint<f64> {
    let [p, q] = m.apply_vec([x, 1.0]);
    ProjPoint::new(p, q).expect("invertible matrix")
}

/// `[[(x+y)/2, -xy], [1, -(x+y)/2]]` as `(n, l, k, m)`, scaled to unit norm.
fn unit_endpoint_cycle(x: &ProjPoint<f64>, y: &ProjPoint<f64>) -> [f64; 4] {
    let ([x1, x2], [y1, y2]) = (x.homogeneous(), y.homogeneous());
    // Homogeneous version: l = (x1 y2 + x2 y1)/2, k = x2 y2, m = x1 y1.
    unit([0.0, 0.5 * (x1 * y2 + x2 * y1), x2 * y2, x1 * y1])
}

fn unit(v: [f64; 4]) -> [f64; 4] {
    let n = v.iter().map(|t| t * t).sum::<f64>().sqrt();
    v.map(|t| t / n)
}

/// Distance between two unit vectors up to sign.
fn proj_dist(a: [f64; 4], b: [f64; 4]) -> f64 {
    let d = |s: f64| a.iter().zip(&b).map(|(x, y)| (x - s * y).abs()).fold(0.0, f64::max);
    d(1.0).min(d(-1.0))
}

fn vector(q: &Cycle<f64>) -> [f64; 4] {
    [q.n, q.l, q.k, q.m]
}

/// Intersection above the axis of `(u - c)² + σ v² = ρ` for two centres.
fn centred_conics(c1: f64, rho1: f64, c2: f64, rho2: f64, sigma: f64) -> (f64, f64) {
    let u = (rho1 - rho2 + c2 * c2 - c1 * c1) / (2.0 * (c2 - c1));
    (u, ((rho1 - (u - c1).powi(2)) / sigma).sqrt())
}

fn criterion_1() -> Outcome {
    let mut r = rng(1);
    let mut worst = 0.0f64;
    let sorted4 = |r: &mut ChaCha8Rng| loop {
        let mut v: [f64; 4] = [0.0; 4].map(|_| r.gen_range(-5.0..5.0));
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        if v.windows(2).all(|w| w[1] - w[0] > 0.05) {
            return v;
        }
    };
    for _ in 0..1000 {
        // Overlapping: circles with diameters [x, y] and [x', y'].
        let [x, xp, y, yp] = sorted4(&mut r);
        let p = extension_point_elliptic(x, y, xp, yp).map_err(|e| e.to_string())?;
        let (u, v) =
            centred_conics((x + y) / 2.0, ((y - x) / 2.0).powi(2), (xp + yp) / 2.0, ((yp - xp) / 2.0).powi(2), 1.0);
        worst = worst.max((p.u - u).abs()).max((p.v - v).abs());

        // Disjoint: equilateral hyperbolas with vertices at the endpoints.
        let [x, y, xp, yp] = sorted4(&mut r);
        let p = extension_point_hyperbolic(x, y, xp, yp).map_err(|e| e.to_string())?;
        let (u, v) =
            centred_conics((x + y) / 2.0, ((y - x) / 2.0).powi(2), (xp + yp) / 2.0, ((yp - xp) / 2.0).powi(2), -1.0);
        worst = worst.max((p.u - u).abs()).max((p.v - v).abs());

        // Parabolas v = -(u - x)(u - y)/L through either configuration.
        let [a, b, c, d] = sorted4(&mut r);
        let ((x, y), (xp, yp)) = if r.gen_bool(0.5) { ((a, c), (b, d)) } else { ((a, b), (c, d)) };
        let (l, lp) = (y - x, yp - xp);
        if (l - lp).abs() < 0.05 {
            continue;
        }
        let p = extension_point_parabolic(x, y, xp, yp).map_err(|e| e.to_string())?;
        // L'(u - x)(u - y) = L(u - x')(u - y'): the difference changes sign
        // between the middle two endpoints, so take the root there.
        let (qa, qb, qc) = (lp - l, l * (xp + yp) - lp * (x + y), lp * x * y - l * xp * yp);
        let disc = (qb * qb - 4.0 * qa * qc).sqrt();
        let u = [(-qb + disc) / (2.0 * qa), (-qb - disc) / (2.0 * qa)]
            .into_iter()
            .find(|u| (b - 1e-9..=c + 1e-9).contains(u))
            .ok_or("no parabola root between the middle endpoints")?;
        let v = ((u - x) * (u - y) / l).abs();
        worst = worst.max((p.u - u).abs()).max((p.v - v).abs());
    }
    check(worst < 1e-9, || format!("max deviation {worst:e}"))?;
    let named = [
        extension_point_elliptic(0.0f64, 2.0, 1.0, 3.0).map_err(|e| e.to_string())?,
        extension_point_hyperbolic(0.0f64, 1.0, 2.0, 3.0).map_err(|e| e.to_string())?,
    ];
    for p in named {
        check((p.u - 1.5).abs() < 1e-12 && (p.v - 3f64.sqrt() / 2.0).abs() < 1e-12, || format!("named value {p}"))?;
    }
    Ok(format!("3 x 1000 quadruples, max |du|,|dv| = {worst:.1e}; named values (1.5, sqrt3/2)"))
}

fn criterion_2() -> Outcome {
    let p = extension_point_elliptic(-2.0f64, 0.5, -1.0, 1.0).map_err(|e| e.to_string())?;
    check(p.u.abs() < 1e-12 && (p.v - 1.0).abs() < 1e-12, || format!("got {p}"))?;
    Ok(format!("(-2, 1/2), (-1, 1) -> ({:.1e}, 1 {:+.1e})", p.u, p.v - 1.0))
}

fn criterion_3() -> Outcome {
    let mut r = rng(3);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let g = random_sl2(&mut r);
        let (x, y): (f64, f64) = (r.gen_range(-5.0..5.0), r.gen_range(-5.0..5.0));
        if (x - y).abs() < 1e-3 {
            continue;
        }
        let (px, py) = (ProjPoint::finite(x), ProjPoint::finite(y));
        let map = MoebiusMap::from_matrix(g).map_err(|e| e.to_string())?;
        let moved = conjugate(&map, &Cycle::from_endpoints(&px, &py));
        let expected = unit_endpoint_cycle(&apply(&g, x), &apply(&g, y));
        worst = worst.max(proj_dist(unit(vector(&moved)), expected));
        // Same check with g C g⁻¹ multiplied out here.
        let c = Mat2::new(0.5 * (x + y), -x * y, 1.0, -0.5 * (x + y));
        let direct = g * c * g.adjugate();
        // [[l + n, -m], [k, -l + n]]
        let v = [0.5 * (direct.a + direct.d), 0.5 * (direct.a - direct.d), direct.c, -direct.b];
        worst = worst.max(proj_dist(unit(v), expected));
    }
    check(worst < 1e-9, || format!("max projective residual {worst:e}"))?;
    Ok(format!("1000 random (g, x, y), max projective residual {worst:.1e}"))
}

/// `2ll' - 2τnn' - km' - mk'`, the expansion of `tr(Q_τ R̃)`.
fn pairing_oracle(q: &[f64; 4], r: &[f64; 4], tau: f64) -> f64 {
    2.0 * q[1] * r[1] - 2.0 * tau * q[0] * r[0] - q[2] * r[3] - q[3] * r[2]
}

fn criterion_4() -> Outcome {
    let mut r = rng(4);
    let mut worst = 0.0f64;
    let random_cycle = |r: &mut ChaCha8Rng| {
        let v: [f64; 4] = [0.0; 4].map(|_| r.gen_range(-3.0..3.0));
        Cycle::from_vector(v).expect("finite")
    };
    for i in 0..1000 {
        let tau = EphClass::ALL[i % 3];
        let g = random_sl2(&mut r);
        let map = MoebiusMap::from_matrix(g).map_err(|e| e.to_string())?;
        let (q, s) = (random_cycle(&mut r), random_cycle(&mut r));
        let before = pairing(&q, &s, tau);
        let after = pairing(&conjugate(&map, &q), &conjugate(&map, &s), tau);
        let scale = q.norm() * s.norm();
        worst = worst.max((before - after).abs() / scale);
        let oracle = pairing_oracle(&vector(&q), &vector(&s), f64::from(tau.tau()));
        worst = worst.max((before - oracle).abs() / scale);
    }
    check(worst < 1e-9, || format!("max relative error {worst:e}"))?;
    let mut self_worst = 0.0f64;
    for _ in 0..100 {
        let (x, y): (f64, f64) = (r.gen_range(-5.0..5.0), r.gen_range(-5.0..5.0));
        let c = Cycle::from_endpoints(&ProjPoint::finite(x), &ProjPoint::finite(y));
        for tau in EphClass::ALL {
            let expected = 0.5 * (x - y).powi(2);
            self_worst = self_worst.max((pairing(&c, &c, tau) - expected).abs() / expected.max(1.0));
        }
    }
    check(self_worst < 1e-12, || format!("self-pairing off by {self_worst:e}"))?;
    Ok(format!("1000 cases over three signatures, max relative error {worst:.1e}; <C,C> = (x-y)^2/2"))
}

/// Three distinct points in `[-5, 5]`.
fn three_points(r: &mut ChaCha8Rng) -> [f64; 3] {
    loop {
        let xs: [f64; 3] = [0.0; 3].map(|_| r.gen_range(-5.0..5.0));
        if (xs[0] - xs[1]).abs() > 0.05 && (xs[1] - xs[2]).abs() > 0.05 && (xs[0] - xs[2]).abs() > 0.05 {
            return xs;
        }
    }
}

fn triple_from(m: &Mat2<f64>, xs: [f64; 3]) -> Option<AlignedTriple<f64>> {
    let intervals = xs.map(|x| Interval::new(ProjPoint::finite(x), apply(m, x)));
    let [a, b, c] = intervals;
    AlignedTriple::new([a.ok()?, b.ok()?, c.ok()?], 1e-9).ok()
}

/// `g H_τ(s) g⁻¹` with `s` away from zero.
fn conjugated_h(tau: EphClass, r: &mut ChaCha8Rng) -> (Mat2<f64>, Mat2<f64>, f64) {
    let g = random_sl2(r);
    let s = r.gen_range(0.3..1.2) * if r.gen_bool(0.5) { 1.0 } else { -1.0 };
    (g * h_tau(tau, s) * g.adjugate(), g, s)
}

/// Triple discriminant for finite endpoints, with the three determinants written out.
fn literal_discriminant(v: [[f64; 2]; 3]) -> f64 {
    let det3 = |m: [[f64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let mid = det3(v.map(|[x, y]| [1.0, x * y, y - x]));
    mid * mid - 4.0 * det3(v.map(|[x, y]| [x, 1.0, y])) * det3(v.map(|[x, y]| [x, -x * y, y]))
}

fn criterion_5() -> Outcome {
    let mut r = rng(5);
    let tol = Tolerance::default();
    let (mut checked, mut banded) = (0, 0);
    for i in 0..1000 {
        // Alternate between clear-cut conjugates and unconstrained maps.
        let m = if i % 2 == 0 { conjugated_h(EphClass::ALL[(i / 2) % 3], &mut r).0 } else { random_sl2(&mut r) };
        let Some(t) = triple_from(&m, three_points(&mut r)) else { continue };
        // The class of m read off its trace, outside a guard band.
        let excess = m.trace().abs() - 2.0;
        let expected = if excess.abs() < 1e-6 {
            banded += 1;
            None
        } else if excess < 0.0 {
            Some(EphClass::Elliptic)
        } else {
            Some(EphClass::Hyperbolic)
        };
        let parabolic = i % 6 == 2;
        let (value, class) = discriminant_classify(&t, tol.eps_class);
        let phi = map_between_triples(&t.xs(), &t.ys()).map_err(|e| e.to_string())?;
        let count = fixed_points(&phi, tol).count();
        check(count == Some(class.fixed_point_count()), || format!("case {i}: {class} but {count:?} fixed points"))?;
        if parabolic {
            check(class == EphClass::Parabolic, || format!("case {i}: parabolic conjugate classified {class}"))?;
        } else if let Some(e) = expected {
            check(class == e, || format!("case {i}: trace says {e}, discriminant says {class}"))?;
        }
        if class != EphClass::Parabolic {
            let ends = t.intervals().map(|iv| [iv.x.value().unwrap(), iv.y.value().unwrap_or(f64::NAN)]);
            if ends.iter().all(|e| e[1].is_finite()) {
                let lit = literal_discriminant(ends);
                check(lit.signum() == value.signum(), || format!("case {i}: literal {lit} vs {value}"))?;
            }
        }
        checked += 1;
    }
    check(checked >= 900, || format!("only {checked} usable triples"))?;
    let canonical = [
        ([[0.0, 1.0], [1.0, 2.0], [2.0, 3.0]], EphClass::Parabolic),
        ([[1.0, 2.0], [2.0, 4.0], [4.0, 8.0]], EphClass::Hyperbolic),
        ([[1.0, -1.0], [2.0, -0.5], [3.0, -1.0 / 3.0]], EphClass::Elliptic),
    ];
    for (v, e) in canonical {
        let t = AlignedTriple::from_values(v, 1e-9).map_err(|e| e.to_string())?;
        let (_, class) = discriminant_classify(&t, tol.eps_class);
        check(class == e, || format!("{v:?} classified {class}, expected {e}"))?;
    }
    Ok(format!("{checked} random aligned triples ({banded} inside the trace guard band); canonical families ok"))
}

fn criterion_6() -> Outcome {
    let mut r = rng(6);
    let mut worst_map = 0.0f64;
    for _ in 0..1000 {
        let xs = three_points(&mut r);
        let g = random_sl2(&mut r);
        let x = OrientedTriple::from_values(xs[0], xs[1], xs[2], 1e-12).map_err(|e| e.to_string())?;
        let ys = xs.map(|v| apply(&g, v));
        let y = OrientedTriple::new(ys[0], ys[1], ys[2], 1e-12).map_err(|e| e.to_string())?;
        let phi = map_between_triples(&x, &y).map_err(|e| e.to_string())?;
        for (a, b) in x.points().iter().zip(&ys) {
            let [p, q] = phi.apply(a).unit();
            let [s, t] = b.unit();
            worst_map = worst_map.max((p * t - q * s).abs());
        }
    }
    check(worst_map < 1e-9, || format!("triple map misses by {worst_map:e}"))?;
    let mut worst_iw = 0.0f64;
    for _ in 0..1000 {
        let g = random_sl2(&mut r);
        let f = iwasawa(&g).map_err(|e| e.to_string())?;
        let (ga, gn, gk) = (f.g_a(), f.g_n(), f.g_k());
        check(ga.b == 0.0 && ga.c == 0.0 && (ga.a * ga.d - 1.0).abs() < 1e-15, || format!("g_A = {ga:?}"))?;
        check(gn.a == 1.0 && gn.c == 0.0 && gn.d == 1.0, || format!("g_N = {gn:?}"))?;
        check(gk.a == gk.d && gk.b == -gk.c && (gk.a.hypot(gk.c) - 1.0).abs() < 1e-15, || format!("g_K = {gk:?}"))?;
        let p = f.product();
        let err = [p.a - g.a, p.b - g.b, p.c - g.c, p.d - g.d].iter().fold(0.0f64, |m, v| m.max(v.abs()));
        worst_iw = worst_iw.max(err / g.norm().max(1.0));
    }
    check(worst_iw < 1e-12, || format!("Iwasawa product off by {worst_iw:e}"))?;
    Ok(format!("triple map residual {worst_map:.1e}; Iwasawa residual {worst_iw:.1e}, factors structurally exact"))
}

fn generator_angle(x: &Mat2<f64>, y: &Mat2<f64>) -> f64 {
    let (a, b) = ([x.a, x.b, x.c, x.d], [y.a, y.b, y.c, y.d]);
    proj_dist(unit(a), unit(b))
}

/// Puts `p` on the orbit `(f₁, f₂)` by reflecting in the cycle through
/// the fixed points when it lies outside.
fn onto_orbit(p: &ProjPoint<f64>, f1: &ProjPoint<f64>, f2: &ProjPoint<f64>) -> Result<ProjPoint<f64>, String> {
    let inside =
        OrientedTriple::new(*f1, *p, *f2, 1e-12).map_err(|e| e.to_string())?.orientation() == Orientation::Positive;
    if inside {
        return Ok(*p);
    }
    // x -> (cx - f1 f2) / (x - c) in homogeneous form.
    let ([a1, a2], [b1, b2]) = (f1.homogeneous(), f2.homogeneous());
    let refl = Mat2::new(0.5 * (a1 * b2 + a2 * b1), -a1 * b1, a2 * b2, -0.5 * (a1 * b2 + a2 * b1));
    let [x1, x2] = p.homogeneous();
    let [q1, q2] = refl.apply_vec([x1, x2]);
    ProjPoint::new(q1, q2).map_err(|e| e.to_string())
}

fn criterion_7() -> Outcome {
    let mut r = rng(7);
    let tol = Tolerance::default();
    let (mut worst_exp, mut worst_hit, mut worst_angle, mut checked) = (0.0f64, 0.0f64, 0.0f64, 0);
    for i in 0..1000 {
        let tau = EphClass::ALL[i % 3];
        let (m, g, s) = conjugated_h(tau, &mut r);
        let Some(t) = triple_from(&m, three_points(&mut r)) else { continue };
        let (sub, t2, t3) = subgroup_from_triple(&t, tol).map_err(|e| format!("case {i}: {e}"))?;
        let e = sub.at(1.0);
        let flip = if (e.trace() > 0.0) == (m.trace() > 0.0) { 1.0 } else { -1.0 };
        let err = [e.a - flip * m.a, e.b - flip * m.b, e.c - flip * m.c, e.d - flip * m.d]
            .iter()
            .fold(0.0f64, |acc, v| acc.max(v.abs()));
        worst_exp = worst_exp.max(err / m.norm());

        let [i1, i2, i3] = t.intervals();
        let fixed = fixed_points(&MoebiusMap::from_matrix(m).map_err(|e| e.to_string())?, tol).points();
        let place = |p: &ProjPoint<f64>| match fixed[..] {
            [f1, f2] => onto_orbit(p, &f1, &f2),
            _ => Ok(*p),
        };
        for (tj, ij) in [(t2, i2), (t3, i3)] {
            let psi = sub.at(tj);
            for (from, to) in [(i1.x, ij.x), (i1.y, ij.y)] {
                let [p, q] = apply_proj(&psi, &place(&from)?).unit();
                let [a, b] = place(&to)?.unit();
                worst_hit = worst_hit.max((p * b - q * a).abs());
            }
        }

        // A second triple from the same subgroup, different time and points.
        let s2 = s * r.gen_range(0.5..1.5);
        let m2 = g * h_tau(tau, s2) * g.adjugate();
        let Some(t2nd) = triple_from(&m2, three_points(&mut r)) else { continue };
        let (sub2, _, _) = subgroup_from_triple(&t2nd, tol).map_err(|e| format!("case {i}: {e}"))?;
        worst_angle = worst_angle.max(generator_angle(&sub.generator(), &sub2.generator()));
        checked += 1;
    }
    check(checked >= 900, || format!("only {checked} usable triples"))?;
    check(worst_exp < 1e-9, || format!("exp(X) off by {worst_exp:e}"))?;
    check(worst_hit < 1e-9, || format!("psi(t_j) misses by {worst_hit:e}"))?;
    check(worst_angle < 1e-7, || format!("generator angle {worst_angle:e}"))?;
    Ok(format!(
        "{checked} triples: exp(X) residual {worst_exp:.1e}, flow residual {worst_hit:.1e}, generator angle {worst_angle:.1e}"
    ))
}

fn apply_proj(m: &Mat2<f64>, p: &ProjPoint<f64>) -> ProjPoint<f64> {
    let [a, b] = m.apply_vec(p.homogeneous());
    ProjPoint::new(a, b).expect("invertible matrix")
}

fn criterion_8() -> Outcome {
    let mut r = rng(8);
    let tol = Tolerance::default();
    let (mut worst, mut checked) = (0.0f64, 0);
    for i in 0..1000 {
        let tau = EphClass::ALL[i % 3];
        let (m, g, _) = conjugated_h(tau, &mut r);
        let Some(t) = triple_from(&m, three_points(&mut r)) else { continue };
        let e = extend_triple(&t, tol).map_err(|e| format!("case {i} ({tau}): {e}"))?;
        check(e.tau == tau, || format!("case {i}: expected {tau}, recovered {}", e.tau))?;
        let form = unit(vector(&e.form));
        for u in [-1.3, -0.4, 0.6, 2.1] {
            let h = g * h_tau(tau, u) * g.adjugate();
            worst = worst.max(proj_dist(unit(vector(&e.form.conjugate_by(&h))), form));
        }
        checked += 1;
    }
    check(checked >= 900, || format!("only {checked} usable triples"))?;
    check(worst < 1e-8, || format!("conjugation residual {worst:e}"))?;
    let k_triple = [
        Interval::new(ProjPoint::finite(0.0), ProjPoint::finite(-1.0)),
        Interval::new(ProjPoint::finite(1.0), ProjPoint::finite(0.0)),
        Interval::new(ProjPoint::infinity(), ProjPoint::finite(1.0)),
    ];
    let [a, b, c] = k_triple.map(|i| i.expect("distinct endpoints"));
    let t = AlignedTriple::new([a, b, c], 1e-9).map_err(|e| e.to_string())?;
    let e = extend_triple(&t, tol).map_err(|e| e.to_string())?;
    let p = e.point.ok_or("K-triple point at infinity")?;
    check(e.tau == EphClass::Elliptic && p.u.abs() < 1e-12 && (p.v - 1.0).abs() < 1e-12, || {
        format!("K-triple gave {p}")
    })?;
    Ok(format!("{checked} conjugates of H_tau: tau recovered, invariance residual {worst:.1e}; K-triple -> (0, 1)"))
}

fn criterion_9() -> Outcome {
    let mut r = rng(9);
    let (mut worst, mut spread, mut cases) = (0.0f64, 0.0f64, 0);
    while cases < 200 {
        let tau = if r.gen_bool(0.5) { EphClass::Elliptic } else { EphClass::Hyperbolic };
        let tv = f64::from(tau.tau());
        let t: f64 = r.gen_range(-3.0..3.0);
        if t.abs() < 1e-2 || (t * t - tv).abs() < 1e-2 {
            continue;
        }
        let rhs = (tv / (t * t - tv).abs().sqrt()).abs();
        let mut seen = Vec::new();
        for _ in 0..5 {
            let x: f64 = r.gen_range(-4.0..4.0);
            let den = t * x + 1.0;
            let y = (x + tv * t) / den;
            if den.abs() < 1e-2 || (x - y).abs() < 1e-3 || y.abs() > 1e4 {
                continue;
            }
            let q = orthogonal_form_through(x, y, tau, 1e-12).map_err(|e| e.to_string())?;
            let lhs = real_line_fraction(&q, tau, 1e-12).map_err(|e| e.to_string())?.abs();
            worst = worst.max((lhs - rhs).abs());
            seen.push(lhs);
        }
        if let (Some(lo), Some(hi)) = (seen.iter().copied().reduce(f64::min), seen.iter().copied().reduce(f64::max)) {
            spread = spread.max(hi - lo);
            cases += 1;
        }
    }
    check(worst < 1e-9, || format!("|LHS| - |RHS| up to {worst:e}"))?;
    check(spread < 1e-9, || format!("LHS varies along the orbit by {spread:e}"))?;
    Ok(format!("{cases} (t, tau) pairs: max ||LHS|-|RHS|| {worst:.1e}, spread over x {spread:.1e}"))
}

/// Values of `name="..."` attributes on lines containing `class`.
fn attributes(svg: &str, class: &str, name: &str) -> Vec<String> {
    let key = format!("{name}=\"");
    svg.lines()
        .filter(|l| l.contains(&format!("class=\"{class}\"")))
        .filter_map(|l| {
            let start = l.find(&key)? + key.len();
            Some(l[start..].split('"').next()?.to_string())
        })
        .collect()
}

fn criterion_10() -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("scenes");
    let mut files: Vec<_> = std::fs::read_dir(&dir)
        .map_err(|e| e.to_string())?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    check(files.len() == 6, || format!("expected six scenes, found {}", files.len()))?;
    let out = std::env::temp_dir().join(format!("poincare-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&out).map_err(|e| e.to_string())?;
    let (mut worst, mut markers) = (0.0f64, 0);
    for f in &files {
        let mut renders = Vec::new();
        for run in 0..2 {
            let target = out.join(format!("{}-{run}.svg", f.file_stem().unwrap().to_string_lossy()));
            let status = Command::new(env!("CARGO_BIN_EXE_poincare"))
                .args(["plot", "--input"])
                .arg(f)
                .arg("--out")
                .arg(&target)
                .status()
                .map_err(|e| e.to_string())?;
            check(status.success(), || format!("{} exited with {status}", f.display()))?;
            renders.push(std::fs::read(&target).map_err(|e| e.to_string())?);
        }
        check(renders[0] == renders[1], || format!("{} differs between runs", f.display()))?;
        let svg = String::from_utf8(renders.remove(0)).map_err(|e| e.to_string())?;
        let tau: f64 = svg
            .split("data-tau=\"")
            .nth(1)
            .and_then(|s| s.split('"').next())
            .and_then(|s| s.parse().ok())
            .ok_or("missing data-tau")?;
        let parse =
            |s: &str| s.split(' ').map(|x| x.parse::<f64>().map_err(|e| e.to_string())).collect::<Result<Vec<_>, _>>();
        let curves = attributes(&svg, "curve", "data-cycle").iter().map(|s| parse(s)).collect::<Result<Vec<_>, _>>()?;
        let us = attributes(&svg, "point", "data-u");
        let vs = attributes(&svg, "point", "data-v");
        check(curves.len() == 2 && !us.is_empty(), || {
            format!("{}: {} curves, {} points", f.display(), curves.len(), us.len())
        })?;
        // The scene as built in memory declares the same points.
        let scene = Scene::from_document(
            &Document::parse(&std::fs::read_to_string(f).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?,
            Tolerance::default(),
        )
        .map_err(|e| e.to_string())?;
        check(scene.points.len() == us.len(), || format!("{}: marker count", f.display()))?;
        for (u, v) in us.iter().zip(&vs) {
            let (u, v): (f64, f64) = (u.parse().map_err(|_| "bad data-u")?, v.parse().map_err(|_| "bad data-v")?);
            markers += 1;
            for c in &curves {
                let (n, l, k, m) = (c[0], c[1], c[2], c[3]);
                let residual = k * (u * u - tau * v * v) - 2.0 * l * u - 2.0 * n * v + m;
                worst = worst.max(residual.abs());
            }
        }
    }
    let _ = std::fs::remove_dir_all(&out);
    check(worst < 1e-6, || format!("marker residual {worst:e}"))?;
    Ok(format!("6 scenes, {markers} markers on both curves (max residual {worst:.1e}), byte-identical reruns"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("closed forms vs conic intersection", criterion_1),
        ("special elliptic pair gives (0, 1)", criterion_2),
        ("covariance of C_xy", criterion_3),
        ("pairing invariance", criterion_4),
        ("discriminant classifier", criterion_5),
        ("triple map and Iwasawa", criterion_6),
        ("subgroup recovery", criterion_7),
        ("extension procedure", criterion_8),
        ("angle to the real line", criterion_9),
        ("rendering", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
