//! Ready-made sweeps for the plate, slab and thickness studies.
//!
//! Sweep ranges: emitter-height sweeps cover z_A in [0.05, 2] with 80 points,
//! thickness sweeps d_z in [0.05, 3] with 120 points, and the lateral edge
//! sweep x_A in [0, 10] with 200 points.

use std::fmt;
use std::str::FromStr;

use super::{ComplexValue, EmitterSpec, Method, Orientation, PlateSpec, Scenario, Sweep, SweepAxis};
use crate::cubature::QuadratureSpec;
use crate::error::Error;

const LOSS: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresetName {
    Fig2,
    Fig3,
    Fig4,
    Fig4Inset,
    Fig5,
}

impl PresetName {
    pub const ALL: [PresetName; 5] = [
        PresetName::Fig2,
        PresetName::Fig3,
        PresetName::Fig4,
        PresetName::Fig4Inset,
        PresetName::Fig5,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PresetName::Fig2 => "fig2",
            PresetName::Fig3 => "fig3",
            PresetName::Fig4 => "fig4",
            PresetName::Fig4Inset => "fig4_inset",
            PresetName::Fig5 => "fig5",
        }
    }
}

impl fmt::Display for PresetName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for PresetName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        PresetName::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::Config(format!("unknown preset '{s}' (expected fig2, fig3, fig4, fig4_inset or fig5)")))
    }
}

/// All presets, one list of scenarios per study.
#[derive(Debug, Clone, PartialEq)]
pub struct Presets {
    pub fig2: Vec<Scenario>,
    pub fig3: Vec<Scenario>,
    pub fig4: Vec<Scenario>,
    pub fig4_inset: Vec<Scenario>,
    pub fig5: Vec<Scenario>,
}

impl Presets {
    pub fn get(&self, name: PresetName) -> &[Scenario] {
        match name {
            PresetName::Fig2 => &self.fig2,
            PresetName::Fig3 => &self.fig3,
            PresetName::Fig4 => &self.fig4,
            PresetName::Fig4Inset => &self.fig4_inset,
            PresetName::Fig5 => &self.fig5,
        }
    }
}

fn z_sweep() -> Sweep {
    Sweep {
        axis: SweepAxis::EmitterZ,
        start: 0.05,
        stop: 2.0,
        count: 80,
    }
}

fn thickness_sweep() -> Sweep {
    Sweep {
        axis: SweepAxis::Thickness,
        start: 0.05,
        stop: 3.0,
        count: 120,
    }
}

fn scenario(name: String, method: Method, orientation: Orientation, chi: f64, plate: [f64; 3], emitter: [f64; 3], sweep: Sweep) -> Scenario {
    Scenario {
        name,
        method,
        orientation,
        chi: ComplexValue { re: chi, im: LOSS },
        geometry: PlateSpec {
            dx: plate[0],
            dy: plate[1],
            dz: plate[2],
        },
        emitter: EmitterSpec {
            x: emitter[0],
            y: emitter[1],
            z: emitter[2],
        },
        sweep,
        quadrature: QuadratureSpec::default(),
    }
}

fn fig2() -> Vec<Scenario> {
    let mut out = Vec::new();
    for chi in [0.1, 0.5] {
        for method in [Method::Born, Method::Slab, Method::SlabLinear] {
            for o in [Orientation::X, Orientation::Z] {
                out.push(scenario(format!("fig2_chi{chi}"), method, o, chi, [10.0, 10.0, 0.2], [0.0, 0.0, 0.0], z_sweep()));
            }
        }
    }
    out
}

fn fig3() -> Vec<Scenario> {
    let mut out = Vec::new();
    for side in [3.0, 0.4, 0.2] {
        for o in [Orientation::X, Orientation::Z] {
            out.push(scenario(format!("fig3_d{side}"), Method::Born, o, 0.1, [side, side, 0.2], [0.0, 0.0, 0.0], z_sweep()));
        }
    }
    for o in [Orientation::X, Orientation::Z] {
        out.push(scenario("fig3_slab".into(), Method::Slab, o, 0.1, [10.0, 10.0, 0.2], [0.0, 0.0, 0.0], z_sweep()));
    }
    out
}

fn fig4() -> Vec<Scenario> {
    let mut out = Vec::new();
    for method in [Method::Born, Method::Slab] {
        for o in [Orientation::X, Orientation::Z] {
            out.push(scenario("fig4".into(), method, o, 0.1, [10.0, 10.0, 0.2], [0.0, 0.0, 0.2], thickness_sweep()));
        }
    }
    out
}

fn fig4_inset() -> Vec<Scenario> {
    [Method::Spa, Method::SpaInfinite, Method::SlabLinear]
        .into_iter()
        .map(|m| scenario("fig4_inset".into(), m, Orientation::X, 0.1, [10.0, 10.0, 0.2], [0.0, 0.0, 5.0], thickness_sweep()))
        .collect()
}

fn fig5() -> Vec<Scenario> {
    let sweep = Sweep {
        axis: SweepAxis::EmitterX,
        start: 0.0,
        stop: 10.0,
        count: 200,
    };
    [Orientation::X, Orientation::Z]
        .into_iter()
        .map(|o| scenario("fig5".into(), Method::Born, o, 0.5, [10.0, 10.0, 0.2], [0.0, 0.0, 0.01], sweep))
        .collect()
}

pub fn presets() -> Presets {
    Presets {
        fig2: fig2(),
        fig3: fig3(),
        fig4: fig4(),
        fig4_inset: fig4_inset(),
        fig5: fig5(),
    }
}

pub fn preset(name: PresetName) -> Vec<Scenario> {
    presets().get(name).to_vec()
}
