//! Parameter sweeps over the rate solvers.
//!
//! A [`Scenario`] fixes a method, a dipole orientation, the plate, the
//! susceptibility and one swept coordinate. Scenario files are TOML with one
//! `[[scenario]]` table per sweep; unknown keys are rejected.

mod output;
mod presets;
pub mod selftest;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use num_complex::Complex64;

use crate::born::{self, Dipole, EmitterConfig, PlateGeometry, RateAxis, RateFlags, RateResult, Susceptibility};
use crate::cubature::QuadratureSpec;
use crate::em::{Position, Wavenumber};
use crate::error::{Error, Result};
use crate::slab::{self, SlabConfig, SlabOrientation};
use crate::spa;

pub use output::{write_csv, CSV_HEADER};
pub use presets::{preset, presets, PresetName, Presets};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Born,
    Slab,
    SlabLinear,
    Spa,
    SpaInfinite,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Born => "born",
            Method::Slab => "slab",
            Method::SlabLinear => "slab_linear",
            Method::Spa => "spa",
            Method::SpaInfinite => "spa_infinite",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AxisName {
    X,
    Y,
    Z,
}

/// Dipole orientation: a coordinate axis or an explicit direction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Orientation {
    Axis(AxisName),
    Vector([f64; 3]),
}

impl Orientation {
    pub const X: Orientation = Orientation::Axis(AxisName::X);
    pub const Y: Orientation = Orientation::Axis(AxisName::Y);
    pub const Z: Orientation = Orientation::Axis(AxisName::Z);

    pub fn dipole(&self) -> Result<Dipole> {
        match *self {
            Orientation::Axis(AxisName::X) => Ok(Dipole::X),
            Orientation::Axis(AxisName::Y) => Ok(Dipole::Y),
            Orientation::Axis(AxisName::Z) => Ok(Dipole::Z),
            Orientation::Vector(v) => Dipole::along(v),
        }
    }

    pub fn label(&self) -> String {
        match *self {
            Orientation::Axis(AxisName::X) => "x".into(),
            Orientation::Axis(AxisName::Y) => "y".into(),
            Orientation::Axis(AxisName::Z) => "z".into(),
            Orientation::Vector(v) => format!("{}:{}:{}", v[0], v[1], v[2]),
        }
    }

    fn slab_orientation(&self) -> Option<SlabOrientation> {
        match *self {
            Orientation::Axis(AxisName::X | AxisName::Y) => Some(SlabOrientation::Parallel),
            Orientation::Axis(AxisName::Z) => Some(SlabOrientation::Perpendicular),
            Orientation::Vector(_) => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SweepAxis {
    /// Emitter height above the top face.
    #[serde(rename = "z_a")]
    EmitterZ,
    /// Plate thickness.
    #[serde(rename = "d_z")]
    Thickness,
    /// Emitter lateral position along x.
    #[serde(rename = "x_a")]
    EmitterX,
}

impl SweepAxis {
    pub fn as_str(self) -> &'static str {
        match self {
            SweepAxis::EmitterZ => "z_a",
            SweepAxis::Thickness => "d_z",
            SweepAxis::EmitterX => "x_a",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sweep {
    pub axis: SweepAxis,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Sweep {
    pub fn values(&self) -> Vec<f64> {
        let n = self.count;
        (0..n)
            .map(|i| {
                if i + 1 == n {
                    self.stop
                } else {
                    self.start + (self.stop - self.start) * i as f64 / (n - 1) as f64
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl From<ComplexValue> for Complex64 {
    fn from(c: ComplexValue) -> Self {
        Complex64::new(c.re, c.im)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlateSpec {
    pub dx: f64,
    pub dy: f64,
    pub dz: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmitterSpec {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// One sweep of one method.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    pub method: Method,
    pub orientation: Orientation,
    pub chi: ComplexValue,
    /// Slab methods only read `dz`.
    pub geometry: PlateSpec,
    /// Fixed emitter coordinates; the swept one is overridden per point.
    pub emitter: EmitterSpec,
    pub sweep: Sweep,
    #[serde(default)]
    pub quadrature: QuadratureSpec,
}

/// Contents of a scenario file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub scenario: Vec<Scenario>,
}

impl ScenarioFile {
    pub fn parse(text: &str) -> Result<Self> {
        let file: ScenarioFile = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        if file.scenario.is_empty() {
            return Err(Error::Config("scenario file defines no [[scenario]] tables".into()));
        }
        for sc in &file.scenario {
            sc.validate()?;
        }
        Ok(file)
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Config(e.to_string()))
    }
}

/// One output line of a sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub sweep_name: String,
    pub sweep_value: f64,
    pub method: String,
    pub orientation: String,
    pub rate: f64,
    pub error_estimate: f64,
    pub evaluations: u64,
    pub flag: String,
}

/// A single evaluation point, fully resolved.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub method: Method,
    pub orientation: Orientation,
    pub chi: Susceptibility,
    pub geometry: PlateGeometry,
    pub emitter: Position,
    pub quadrature: QuadratureSpec,
}

impl Point {
    /// Runs the underlying solver for this point.
    pub fn evaluate(&self) -> Result<RateResult> {
        let k = Wavenumber::TRANSITION;
        match self.method {
            Method::Born => {
                let emitter = EmitterConfig::new(self.emitter, self.orientation.dipole()?);
                born::decay_rate(&self.geometry, &emitter, self.chi, &self.quadrature)
            }
            Method::Slab | Method::SlabLinear => {
                let orientation = self.orientation.slab_orientation().ok_or_else(|| {
                    Error::Config("slab methods need an x, y or z dipole".into())
                })?;
                let cfg = SlabConfig::from_susceptibility(self.chi, self.geometry.dz, self.emitter.z)?;
                let mut r = if self.method == Method::Slab {
                    slab::slab_rate(&cfg, orientation, k)?
                } else {
                    slab::slab_rate_linearized(&cfg, orientation, k)?
                };
                r.flags.strong_contrast = self.chi.is_strong();
                Ok(r)
            }
            Method::Spa => spa::spa_rate_parallel(self.emitter.z, &self.geometry, self.chi, k),
            Method::SpaInfinite => spa::spa_rate_parallel_infinite(self.emitter.z, self.geometry.dz, self.chi, k),
        }
    }
}

impl Point {
    /// Like [`Point::evaluate`], but a non-converged integral yields its best
    /// estimate with the `unconverged` flag set instead of an error.
    pub fn evaluate_flagged(&self) -> Result<RateResult> {
        match self.evaluate() {
            Err(Error::Convergence {
                value,
                error_estimate,
                evaluations,
            }) => Ok(RateResult {
                rate: value,
                error_estimate,
                evaluations,
                flags: RateFlags {
                    unconverged: true,
                    strong_contrast: self.chi.is_strong(),
                    paraxial: false,
                },
            }),
            other => other,
        }
    }
}

impl Scenario {
    pub fn susceptibility(&self) -> Result<Susceptibility> {
        Susceptibility::from_complex(self.chi.into())
    }

    /// The resolved point at sweep value `v`.
    pub fn point(&self, v: f64) -> Result<Point> {
        let mut geometry = self.geometry;
        let mut emitter = Position::new(self.emitter.x, self.emitter.y, self.emitter.z);
        match self.sweep.axis {
            SweepAxis::EmitterZ => emitter.z = v,
            SweepAxis::Thickness => geometry.dz = v,
            SweepAxis::EmitterX => emitter.x = v,
        }
        Ok(Point {
            method: self.method,
            orientation: self.orientation,
            chi: self.susceptibility()?,
            geometry: PlateGeometry::new(geometry.dx, geometry.dy, geometry.dz)?,
            emitter,
            quadrature: self.quadrature,
        })
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Config(format!("scenario '{}': {msg}", self.name)));
        let sw = &self.sweep;
        if sw.count < 2 {
            return bad(format!("sweep count must be >= 2, got {}", sw.count));
        }
        if !(sw.start.is_finite() && sw.stop.is_finite() && sw.start < sw.stop) {
            return bad(format!("sweep needs start < stop, got {} .. {}", sw.start, sw.stop));
        }
        self.susceptibility()?;
        self.orientation.dipole()?;
        self.quadrature.validate()?;
        let lateral = self.emitter.x != 0.0 || self.emitter.y != 0.0 || sw.axis == SweepAxis::EmitterX;
        match self.method {
            Method::Born => {}
            Method::Slab | Method::SlabLinear => {
                if self.orientation.slab_orientation().is_none() {
                    return bad("slab methods need an x, y or z dipole".into());
                }
                if sw.axis == SweepAxis::EmitterX {
                    return bad("slab results do not depend on x_a".into());
                }
            }
            Method::Spa | Method::SpaInfinite => {
                if !matches!(self.orientation, Orientation::Axis(AxisName::X | AxisName::Y)) {
                    return bad("stationary-phase methods cover parallel dipoles only".into());
                }
                if lateral {
                    return bad("stationary-phase methods need the emitter on the plate axis".into());
                }
            }
        }
        for v in sw.values() {
            let p = self.point(v)?;
            let outside = match self.method {
                Method::Born => p.geometry.bounds().distance_to(p.emitter) > 0.0,
                _ => p.emitter.z > 0.0,
            };
            if !outside {
                return bad(format!("{} = {v} puts the emitter inside or on the plate", sw.axis.as_str()));
            }
        }
        Ok(())
    }
}

fn row(sc: &Scenario, value: f64, result: RateResult) -> SweepRow {
    SweepRow {
        sweep_name: sc.name.clone(),
        sweep_value: value,
        method: sc.method.as_str().into(),
        orientation: sc.orientation.label(),
        rate: result.rate,
        error_estimate: result.error_estimate,
        evaluations: result.evaluations,
        flag: result.flags.to_string(),
    }
}

/// Evaluates one sweep point. Non-convergence is folded into the row as a
/// flagged best estimate; every other error is returned.
pub fn run_point(sc: &Scenario, value: f64) -> Result<SweepRow> {
    let result = sc.point(value)?.evaluate_flagged()?;
    Ok(row(sc, value, result))
}

/// Runs every point of a sweep; rows come back in ascending sweep order.
pub fn run_scenario(sc: &Scenario) -> Result<Vec<SweepRow>> {
    sc.validate()?;
    sc.sweep
        .values()
        .into_par_iter()
        .map(|v| run_point(sc, v))
        .collect()
}

/// Runs several scenarios back to back, concatenating their rows.
pub fn run_all(scenarios: &[Scenario]) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::new();
    for sc in scenarios {
        rows.extend(run_scenario(sc)?);
    }
    Ok(rows)
}

/// Axis dipoles with a scalar Born integrand, keyed by orientation.
pub fn rate_axis(orientation: &Orientation) -> Option<RateAxis> {
    orientation.dipole().ok().and_then(Dipole::axis)
}
