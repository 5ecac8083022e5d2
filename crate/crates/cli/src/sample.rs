//! Polylines approximating the quadrics `k(u² - τv²) - 2lu - 2nv + m = 0`,
//! clipped to the viewport.

use poincare_core::{EphClass, QuadraticCurve};

use crate::scene::Viewport;

pub type Polyline = Vec<(f64, f64)>;

fn corners_reach(c: (f64, f64), vp: &Viewport) -> f64 {
    [(vp.umin, vp.vmin), (vp.umin, vp.vmax), (vp.umax, vp.vmin), (vp.umax, vp.vmax)]
        .iter()
        .map(|(u, v)| (u - c.0).hypot(v - c.1))
        .fold(0.0, f64::max)
}

fn linspace(a: f64, b: f64, samples: usize) -> impl Iterator<Item = f64> {
    let n = samples.max(2) - 1;
    (0..=n).map(move |i| a + (b - a) * i as f64 / n as f64)
}

/// Segment of the line through `p` with direction `d` long enough to
/// cross the whole viewport.
fn line(p: (f64, f64), d: (f64, f64), vp: &Viewport) -> Polyline {
    let len = d.0.hypot(d.1);
    if len == 0.0 {
        return Vec::new();
    }
    let r = corners_reach(p, vp) + 1.0;
    let d = (d.0 / len * r, d.1 / len * r);
    vec![(p.0 - d.0, p.1 - d.1), (p.0 + d.0, p.1 + d.1)]
}

/// Unclipped branches of the curve; `samples` points per branch.
pub fn branches(c: &QuadraticCurve<f64>, vp: &Viewport, samples: usize) -> Vec<Polyline> {
    let scale = c.k.abs().max(c.l.abs()).max(c.n.abs()).max(c.m.abs());
    if scale == 0.0 || !scale.is_finite() {
        return Vec::new();
    }
    let (k, l, n, m) = (c.k / scale, c.l / scale, c.n / scale, c.m / scale);
    if k.abs() <= 1e-12 {
        // 2lu + 2nv = m.
        let nn = l * l + n * n;
        if nn == 0.0 {
            return Vec::new();
        }
        let p = (m * l / (2.0 * nn), m * n / (2.0 * nn));
        return vec![line(p, (-n, l), vp)];
    }
    let (a, b) = (l / k, n / k);
    match c.tau {
        EphClass::Elliptic => {
            let r2 = a * a + b * b - m / k;
            if r2 <= 0.0 {
                return Vec::new();
            }
            let r = r2.sqrt();
            let step = std::f64::consts::TAU;
            vec![linspace(0.0, step, samples).map(|t| (a + r * t.cos(), b + r * t.sin())).collect()]
        }
        EphClass::Parabolic => {
            if n.abs() <= 1e-12 {
                // k(u - a)² = k a² - m: vertical lines.
                let d = a * a - m / k;
                if d < 0.0 {
                    return Vec::new();
                }
                let s = d.sqrt();
                let mut roots = vec![a - s];
                if s > 0.0 {
                    roots.push(a + s);
                }
                return roots.into_iter().map(|u| vec![(u, vp.vmin), (u, vp.vmax)]).collect();
            }
            vec![linspace(vp.umin, vp.umax, samples).map(|u| (u, (k * u * u - 2.0 * l * u + m) / (2.0 * n))).collect()]
        }
        EphClass::Hyperbolic => {
            // (u - a)² - (v + b)² = ρ.
            let rho = a * a - b * b - m / k;
            let centre = (a, -b);
            let reach = corners_reach(centre, vp) + 1.0;
            if rho == 0.0 {
                return vec![line(centre, (1.0, 1.0), vp), line(centre, (1.0, -1.0), vp)];
            }
            let r = rho.abs().sqrt();
            let s_max = (reach / r).asinh();
            let branch = |sign: f64| -> Polyline {
                linspace(-s_max, s_max, samples)
                    .map(|s| {
                        let (ch, sh) = (sign * r * s.cosh(), r * s.sinh());
                        if rho > 0.0 {
                            (centre.0 + ch, centre.1 + sh)
                        } else {
                            (centre.0 + sh, centre.1 + ch)
                        }
                    })
                    .collect()
            };
            vec![branch(1.0), branch(-1.0)]
        }
    }
}

/// Liang-Barsky: the parameter range of `p + t (q - p)`, `t ∈ [0, 1]`,
/// inside the viewport.
pub fn clip_segment(p: (f64, f64), q: (f64, f64), vp: &Viewport) -> Option<(f64, f64)> {
    let (du, dv) = (q.0 - p.0, q.1 - p.1);
    let (mut t0, mut t1) = (0.0f64, 1.0f64);
    for (den, num) in [(-du, p.0 - vp.umin), (du, vp.umax - p.0), (-dv, p.1 - vp.vmin), (dv, vp.vmax - p.1)] {
        if den == 0.0 {
            if num < 0.0 {
                return None;
            }
        } else {
            let t = num / den;
            if den < 0.0 {
                t0 = t0.max(t);
            } else {
                t1 = t1.min(t);
            }
        }
    }
    (t0 <= t1).then_some((t0, t1))
}

/// Splits a polyline into the runs that stay inside the viewport.
pub fn clip_polyline(line: &[(f64, f64)], vp: &Viewport) -> Vec<Polyline> {
    let mut runs = Vec::new();
    let mut run: Polyline = Vec::new();
    let mut open = false;
    for w in line.windows(2) {
        let (p, q) = (w[0], w[1]);
        let Some((t0, t1)) = clip_segment(p, q, vp) else {
            open = false;
            continue;
        };
        let at = |t: f64| (p.0 + t * (q.0 - p.0), p.1 + t * (q.1 - p.1));
        if !(open && t0 == 0.0) {
            if run.len() >= 2 {
                runs.push(std::mem::take(&mut run));
            }
            run.clear();
            run.push(at(t0));
        }
        run.push(at(t1));
        open = t1 == 1.0;
    }
    if run.len() >= 2 {
        runs.push(run);
    }
    runs
}

/// Clipped polylines of a curve.
pub fn sample_curve(c: &QuadraticCurve<f64>, vp: &Viewport, samples: usize) -> Vec<Polyline> {
    branches(c, vp, samples).iter().flat_map(|b| clip_polyline(b, vp)).collect()
}
