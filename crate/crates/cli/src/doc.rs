//! Input documents shared by every command.
//!
//! ```json
//! {"tau": -1, "intervals": [[-2, 0.5], [-1, 1]], "viewport": [-3, 2, -0.5, 2]}
//! ```
//!
//! `tau` may be `null` (classify first), an endpoint may be the string
//! `"inf"`, and `viewport` is `[umin, umax, vmin, vmax]`.

use poincare_core::{AlignedTriple, Cycle, EphClass, Interval, ProjPoint};
use serde::Deserialize;

use crate::error::{CliError, Result};

/// A real number or the point at infinity.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum Endpoint {
    Number(f64),
    Text(String),
}

impl Endpoint {
    pub fn point(&self) -> Result<ProjPoint<f64>> {
        match self {
            Endpoint::Number(x) if x.is_finite() => Ok(ProjPoint::finite(*x)),
            Endpoint::Number(x) => Err(CliError::schema(format!("endpoint {x} is not finite"))),
            Endpoint::Text(s) => match s.trim().to_ascii_lowercase().as_str() {
                "inf" | "+inf" | "-inf" | "infinity" | "∞" => Ok(ProjPoint::infinity()),
                other => Err(CliError::schema(format!("endpoint \"{other}\" is neither a number nor \"inf\""))),
            },
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    #[serde(default)]
    pub title: Option<String>,
    #[serde(default)]
    pub tau: Option<i64>,
    #[serde(default)]
    pub intervals: Vec<[Endpoint; 2]>,
    /// Extra cycles `(n, l, k, m)` drawn as curves.
    #[serde(default)]
    pub cycles: Vec<[f64; 4]>,
    /// Ratio of `n` to the half length of each interval; fixes the angle
    /// between its curve and the real line.
    #[serde(default)]
    pub n_ratio: Option<f64>,
    /// Declared points `(u, v)`; computed from the first two curves when
    /// absent.
    #[serde(default)]
    pub points: Vec<[f64; 2]>,
    #[serde(default)]
    pub viewport: Option<[f64; 4]>,
}

impl Document {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| CliError::schema(e.to_string()))
    }

    pub fn eph(&self) -> Result<Option<EphClass>> {
        match self.tau {
            None => Ok(None),
            Some(t) => i8::try_from(t)
                .ok()
                .and_then(EphClass::from_tau)
                .map(Some)
                .ok_or_else(|| CliError::schema(format!("tau must be -1, 0, 1 or null, got {t}"))),
        }
    }

    pub fn interval_list(&self) -> Result<Vec<Interval<f64>>> {
        self.intervals
            .iter()
            .map(|[x, y]| {
                let (x, y) = (x.point()?, y.point()?);
                Interval::new(x, y).map_err(|e| CliError::schema(e.to_string()))
            })
            .collect()
    }

    pub fn cycle_list(&self) -> Result<Vec<Cycle<f64>>> {
        self.cycles
            .iter()
            .map(|[n, l, k, m]| Cycle::new(*n, *l, *k, *m).map_err(|e| CliError::schema(e.to_string())))
            .collect()
    }

    /// The three intervals as an aligned triple; a mismatch of orientations
    /// is a geometric error, a wrong count a schema error.
    pub fn triple(&self, eps: f64) -> Result<AlignedTriple<f64>> {
        let list = self.interval_list()?;
        let intervals: [Interval<f64>; 3] =
            list.try_into().map_err(|v: Vec<_>| CliError::schema(format!("expected 3 intervals, got {}", v.len())))?;
        Ok(AlignedTriple::new(intervals, eps)?)
    }
}
