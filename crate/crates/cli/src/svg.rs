//! Hand-written SVG 1.1. Output depends only on the scene and the
//! sampling density.

use std::fmt::Write;

use crate::sample::sample_curve;
use crate::scene::Scene;

const WIDTH: f64 = 480.0;
const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

fn colour(i: usize) -> &'static str {
    PALETTE[i % PALETTE.len()]
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

struct Frame {
    scale: f64,
    umin: f64,
    vmax: f64,
}

impl Frame {
    fn x(&self, u: f64) -> String {
        num((u - self.umin) * self.scale)
    }

    fn y(&self, v: f64) -> String {
        num((self.vmax - v) * self.scale)
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// Renders the scene; every curve is sampled with `samples` points per
/// branch. Curves and points carry their exact data as attributes.
pub fn render(scene: &Scene, samples: usize) -> String {
    let vp = scene.viewport;
    let f = Frame { scale: WIDTH / vp.width(), umin: vp.umin, vmax: vp.vmax };
    let height = vp.height() * f.scale;
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}" data-tau="{tau}">"#,
        w = num(WIDTH),
        h = num(height),
        tau = scene.tau.tau(),
    );
    if let Some(t) = &scene.title {
        let _ = writeln!(s, "  <title>{}</title>", escape(t));
    }
    let _ = writeln!(s, r#"  <rect width="100%" height="100%" fill="white"/>"#);
    if vp.vmin <= 0.0 && 0.0 <= vp.vmax {
        let _ = writeln!(
            s,
            r#"  <line class="axis" x1="0" y1="{y}" x2="{w}" y2="{y}" stroke="black" stroke-width="1"/>"#,
            y = f.y(0.0),
            w = num(WIDTH),
        );
    }

    let _ = writeln!(s, r#"  <g class="curves" fill="none" stroke-width="1.5">"#);
    for (i, c) in scene.curves.iter().enumerate() {
        let mut d = String::new();
        for run in sample_curve(c, &vp, samples) {
            for (j, (u, v)) in run.iter().enumerate() {
                let _ = write!(d, "{}{},{} ", if j == 0 { 'M' } else { 'L' }, f.x(*u), f.y(*v));
            }
        }
        let _ = writeln!(
            s,
            r#"    <path class="curve" data-cycle="{} {} {} {}" stroke="{}" d="{}"/>"#,
            c.n,
            c.l,
            c.k,
            c.m,
            colour(i),
            d.trim_end(),
        );
    }
    let _ = writeln!(s, "  </g>");

    let _ = writeln!(s, r#"  <g class="intervals" stroke-width="4" stroke-linecap="round">"#);
    for (i, iv) in scene.intervals.iter().enumerate() {
        let ends: Vec<f64> = [iv.x.value(), iv.y.value()].into_iter().flatten().collect();
        if let [a, b] = ends[..] {
            let (a, b) = (a.min(b).max(vp.umin), a.max(b).min(vp.umax));
            if a < b {
                let _ = writeln!(
                    s,
                    r#"    <line class="interval" x1="{}" y1="{y}" x2="{}" y2="{y}" stroke="{}" stroke-opacity="0.6"/>"#,
                    f.x(a),
                    f.x(b),
                    colour(i),
                    y = f.y(0.0),
                );
            }
        }
        for e in ends.into_iter().filter(|e| vp.contains(*e, 0.0)) {
            let _ = writeln!(
                s,
                r#"    <circle class="endpoint" cx="{}" cy="{}" r="2.5" fill="{}" stroke="none"/>"#,
                f.x(e),
                f.y(0.0),
                colour(i),
            );
        }
    }
    let _ = writeln!(s, "  </g>");

    let _ = writeln!(s, r#"  <g class="points" fill="black">"#);
    for p in scene.points.iter().filter(|p| vp.contains(p.u, p.v)) {
        let _ = writeln!(
            s,
            r#"    <circle class="point" data-u="{}" data-v="{}" cx="{}" cy="{}" r="3.5"/>"#,
            p.u,
            p.v,
            f.x(p.u),
            f.y(p.v),
        );
    }
    let _ = writeln!(s, "  </g>");
    let _ = writeln!(s, "</svg>");
    s
}
