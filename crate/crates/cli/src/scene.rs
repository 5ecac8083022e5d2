//! What gets drawn: intervals on the axis, their curves and the points
//! those curves share.

use poincare_core::cycle::curve_from_cycle;
use poincare_core::extension::{common_points, extend_triple};
use poincare_core::{Cycle, EphClass, ExtensionPoint, Interval, QuadraticCurve, Tolerance};

use crate::doc::Document;
use crate::error::{CliError, Result};

/// Plot window `[umin, umax] × [vmin, vmax]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Viewport {
    pub umin: f64,
    pub umax: f64,
    pub vmin: f64,
    pub vmax: f64,
}

impl Viewport {
    pub fn new(umin: f64, umax: f64, vmin: f64, vmax: f64) -> Result<Self> {
        let ok = [umin, umax, vmin, vmax].iter().all(|x| x.is_finite()) && umin < umax && vmin < vmax;
        if !ok {
            return Err(CliError::schema(format!("degenerate viewport [{umin}, {umax}, {vmin}, {vmax}]")));
        }
        Ok(Self { umin, umax, vmin, vmax })
    }

    pub fn width(&self) -> f64 {
        self.umax - self.umin
    }

    pub fn height(&self) -> f64 {
        self.vmax - self.vmin
    }

    pub fn contains(&self, u: f64, v: f64) -> bool {
        (self.umin..=self.umax).contains(&u) && (self.vmin..=self.vmax).contains(&v)
    }

    /// Window around the finite endpoints and points, with some margin.
    fn fit(xs: &[f64], points: &[ExtensionPoint<f64>]) -> Self {
        let us = xs.iter().copied().chain(points.iter().map(|p| p.u));
        let (lo, hi) = us.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), u| (a.min(u), b.max(u)));
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (-1.0, 1.0) };
        let span = (hi - lo).max(1.0);
        let top = points.iter().map(|p| p.v).fold(0.5 * span, f64::max) + 0.15 * span;
        Self { umin: lo - 0.25 * span, umax: hi + 0.25 * span, vmin: -0.15 * span, vmax: top }
    }
}

/// Contents of one panel. Every curve carries the scene's τ.
#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    pub title: Option<String>,
    pub tau: EphClass,
    pub intervals: Vec<Interval<f64>>,
    pub curves: Vec<QuadraticCurve<f64>>,
    pub points: Vec<ExtensionPoint<f64>>,
    pub viewport: Viewport,
}

/// Default ratio of `n` to the half length: orthogonal circles and
/// hyperbolas, downward parabolas with focus on the axis.
pub fn default_n_ratio(tau: EphClass) -> f64 {
    match tau {
        EphClass::Parabolic => -1.0,
        _ => 0.0,
    }
}

/// `C_xy` with `n` set to `ratio · sqrt(l² - km)`.
///
/// `l² - km` is minus the determinant of `C_xy`, so the result moves
/// covariantly with `[x, y]` and the angle to the real line is the same
/// for every interval.
pub fn interval_cycle(i: &Interval<f64>, ratio: f64) -> Result<Cycle<f64>> {
    let c = i.cycle();
    let half = (c.l * c.l - c.k * c.m).max(0.0).sqrt();
    Ok(Cycle::new(ratio * half, c.l, c.k, c.m)?)
}

impl Scene {
    pub fn new(
        title: Option<String>,
        tau: EphClass,
        intervals: Vec<Interval<f64>>,
        curves: Vec<QuadraticCurve<f64>>,
        points: Vec<ExtensionPoint<f64>>,
        viewport: Viewport,
    ) -> Result<Self> {
        if let Some(c) = curves.iter().find(|c| c.tau != tau) {
            return Err(CliError::schema(format!("curve of class {} in a {tau} scene", c.tau)));
        }
        if let Some(p) = points.iter().find(|p| p.tau != tau) {
            return Err(CliError::schema(format!("point of class {} in a {tau} scene", p.tau)));
        }
        Ok(Self { title, tau, intervals, curves, points, viewport })
    }

    /// Builds a scene from a document.
    ///
    /// With a given τ the curves are the interval cycles followed by the
    /// extra cycles, and the points are the declared ones or else the
    /// common points of the first two curves. With `tau: null` the three
    /// intervals are extended and the point is the extension point.
    pub fn from_document(doc: &Document, tol: Tolerance<f64>) -> Result<Self> {
        let intervals = doc.interval_list()?;
        let (tau, extension) = match doc.eph()? {
            Some(tau) => (tau, None),
            None => {
                let e = extend_triple(&doc.triple(tol.eps)?, tol)?;
                (e.tau, Some(e))
            }
        };
        let ratio = doc.n_ratio.unwrap_or_else(|| default_n_ratio(tau));
        if !ratio.is_finite() {
            return Err(CliError::schema("n_ratio must be finite"));
        }
        let mut cycles = intervals.iter().map(|i| interval_cycle(i, ratio)).collect::<Result<Vec<_>>>()?;
        cycles.extend(doc.cycle_list()?);
        let curves: Vec<_> = cycles.iter().map(|c| curve_from_cycle(c, tau)).collect();

        let points = if !doc.points.is_empty() {
            doc.points
                .iter()
                .map(|[u, v]| ExtensionPoint::new(*u, *v, tau).map_err(|e| CliError::schema(e.to_string())))
                .collect::<Result<Vec<_>>>()?
        } else if let Some(e) = extension {
            e.point.into_iter().collect()
        } else if cycles.len() >= 2 {
            common_points(&cycles[0], &cycles[1], tau, tol.eps)?
        } else {
            Vec::new()
        };

        let viewport = match doc.viewport {
            Some([a, b, c, d]) => Viewport::new(a, b, c, d)?,
            None => {
                let xs: Vec<f64> = intervals.iter().flat_map(|i| [i.x.value(), i.y.value()]).flatten().collect();
                Viewport::fit(&xs, &points)
            }
        };
        Scene::new(doc.title.clone(), tau, intervals, curves, points, viewport)
    }

    /// Largest `|residual|` of a point on a curve, over all pairs.
    pub fn worst_residual(&self) -> f64 {
        self.points.iter().flat_map(|p| self.curves.iter().map(move |c| c.residual(p.u, p.v).abs())).fold(0.0, f64::max)
    }
}
