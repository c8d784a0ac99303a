//! First-order Born decay rates near a rectangular dielectric plate.
//!
//! To first order in the susceptibility χ the equal-position scattering
//! Green tensor at the emitter is a volume integral over the plate,
//!
//! ```text
//! G₁(r_A, r_A) = (k⁴/16π²) χ ∫ d³s [a² I + (b² - 2ab) û⊗û] e^{2iq},
//! ```
//!
//! with `u = r_A - s`, `q = k|u|`. The normalized rate follows from
//! `Γ/Γ₀ = 1 + (6π/k) d̂·Im G₁·d̂`, which for dipoles along a coordinate
//! axis collapses to the scalar form
//! `1 + (3k³/8π) Im{χ ∫ [a² + (b² - 2ab) w/u²] e^{2iq}}`, `w` being the
//! squared offset along the dipole axis.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::cubature::{integrate_box_with_focus, Box3, CubatureError, QuadratureSpec};
use crate::em::{ab_unchecked, ComplexTensor3, Position, Wavenumber};
use crate::error::{Error, Result};

/// Dielectric susceptibility `χ_ε = ε - 1` at the transition frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Susceptibility(Complex64);

impl Susceptibility {
    /// Magnitude above which first-order Born results get a validity flag.
    pub const WEAK_LIMIT: f64 = 0.5;

    pub fn new(re: f64, im: f64) -> Result<Self> {
        Self::from_complex(Complex64::new(re, im))
    }

    pub fn from_complex(chi: Complex64) -> Result<Self> {
        if !(chi.re.is_finite() && chi.im.is_finite()) {
            return Err(Error::Domain(format!("susceptibility must be finite, got {chi}")));
        }
        if chi.im < 0.0 {
            return Err(Error::Domain(format!(
                "susceptibility must be passive (Im χ >= 0), got {chi}"
            )));
        }
        Ok(Susceptibility(chi))
    }

    pub fn from_permittivity(eps: Complex64) -> Result<Self> {
        Self::from_complex(eps - 1.0)
    }

    pub fn zero() -> Self {
        Susceptibility(Complex64::new(0.0, 0.0))
    }

    #[inline]
    pub fn value(self) -> Complex64 {
        self.0
    }

    pub fn permittivity(self) -> Complex64 {
        self.0 + 1.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == Complex64::new(0.0, 0.0)
    }

    /// True when `|χ|` exceeds the range where the linear expansion is
    /// known to be reliable.
    pub fn is_strong(self) -> bool {
        self.0.norm() > Self::WEAK_LIMIT
    }

    pub fn scaled(self, c: f64) -> Result<Self> {
        Self::from_complex(self.0 * c)
    }
}

/// Plate of size `dx × dy × dz` occupying
/// `[-dx/2, dx/2] × [-dy/2, dy/2] × [-dz, 0]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlateGeometry {
    pub dx: f64,
    pub dy: f64,
    pub dz: f64,
}

impl PlateGeometry {
    pub fn new(dx: f64, dy: f64, dz: f64) -> Result<Self> {
        let ok = |v: f64| v.is_finite() && v > 0.0;
        if ok(dx) && ok(dy) && ok(dz) {
            Ok(PlateGeometry { dx, dy, dz })
        } else {
            Err(Error::Geometry(format!(
                "plate dimensions must be positive, got {dx} × {dy} × {dz}"
            )))
        }
    }

    pub fn cube(side: f64) -> Result<Self> {
        Self::new(side, side, side)
    }

    pub fn bounds(&self) -> Box3 {
        Box3 {
            lo: Position::new(-0.5 * self.dx, -0.5 * self.dy, -self.dz),
            hi: Position::new(0.5 * self.dx, 0.5 * self.dy, 0.0),
        }
    }
}

/// Real unit dipole direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dipole([f64; 3]);

impl Dipole {
    pub const X: Dipole = Dipole([1.0, 0.0, 0.0]);
    pub const Y: Dipole = Dipole([0.0, 1.0, 0.0]);
    pub const Z: Dipole = Dipole([0.0, 0.0, 1.0]);

    /// Accepts a vector whose norm is 1 to within `1e-12`.
    pub fn new(v: [f64; 3]) -> Result<Self> {
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if !n.is_finite() || (n - 1.0).abs() > 1e-12 {
            return Err(Error::Domain(format!("dipole must be a unit vector, |d| = {n}")));
        }
        Ok(Dipole(v))
    }

    /// Normalizes any non-zero vector.
    pub fn along(v: [f64; 3]) -> Result<Self> {
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if !(n.is_finite() && n > 0.0) {
            return Err(Error::Domain("dipole direction must be non-zero".into()));
        }
        Ok(Dipole(v.map(|c| c / n)))
    }

    #[inline]
    pub fn components(self) -> [f64; 3] {
        self.0
    }

    /// The coordinate axis the dipole lies along, if any.
    pub fn axis(self) -> Option<RateAxis> {
        let [x, y, z] = self.0.map(f64::abs);
        match (x, y, z) {
            (1.0, 0.0, 0.0) => Some(RateAxis::ParallelX),
            (0.0, 1.0, 0.0) => Some(RateAxis::ParallelY),
            (0.0, 0.0, 1.0) => Some(RateAxis::PerpendicularZ),
            _ => None,
        }
    }
}

/// Dipole axes that have a scalar integrand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RateAxis {
    ParallelX,
    /// The x integrand with x and y exchanged.
    ParallelY,
    PerpendicularZ,
}

impl RateAxis {
    pub fn dipole(self) -> Dipole {
        match self {
            RateAxis::ParallelX => Dipole::X,
            RateAxis::ParallelY => Dipole::Y,
            RateAxis::PerpendicularZ => Dipole::Z,
        }
    }
}

/// Emitter position and dipole direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmitterConfig {
    pub position: Position,
    pub dipole: Dipole,
}

impl EmitterConfig {
    pub fn new(position: Position, dipole: Dipole) -> Self {
        EmitterConfig { position, dipole }
    }

    pub fn on_axis(z: f64, dipole: Dipole) -> Self {
        EmitterConfig::new(Position::new(0.0, 0.0, z), dipole)
    }
}

/// Soft caveats attached to a rate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RateFlags {
    /// `|χ| > 0.5`: outside the range where first order is accurate.
    pub strong_contrast: bool,
    /// Stationary-phase result with the emitter closer than one wavelength.
    pub paraxial: bool,
    /// The integrator did not meet its tolerance; the rate is a best estimate.
    pub unconverged: bool,
}

impl RateFlags {
    pub fn is_clean(&self) -> bool {
        *self == RateFlags::default()
    }
}

impl fmt::Display for RateFlags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.strong_contrast {
            parts.push("strong_chi");
        }
        if self.paraxial {
            parts.push("paraxial");
        }
        if self.unconverged {
            parts.push("unconverged");
        }
        if parts.is_empty() {
            f.write_str("ok")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

/// Normalized decay rate with its integration error and work count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateResult {
    /// `Γ/Γ₀`.
    pub rate: f64,
    pub error_estimate: f64,
    pub evaluations: u64,
    pub flags: RateFlags,
}

impl RateResult {
    pub fn vacuum() -> Self {
        RateResult {
            rate: 1.0,
            error_estimate: 0.0,
            evaluations: 0,
            flags: RateFlags::default(),
        }
    }

    /// `Γ/Γ₀ - 1`.
    pub fn excess(&self) -> f64 {
        self.rate - 1.0
    }
}

fn separation(s: Position, r_a: Position) -> Result<(Position, f64)> {
    let u = r_a - s;
    let d = u.norm();
    if d > 0.0 {
        Ok((u, d))
    } else {
        Err(Error::Domain("integration point coincides with the emitter".into()))
    }
}

/// Pointwise integrand of the first-order Born tensor at the emitter:
/// `(k⁴/16π²) χ [a² I + (b² - 2ab) û⊗û] e^{2iq}`.
pub fn born1_tensor_integrand(
    s: Position,
    r_a: Position,
    k: Wavenumber,
    chi: Susceptibility,
) -> Result<ComplexTensor3> {
    let (u, dist) = separation(s, r_a)?;
    Ok(tensor_integrand_unchecked(u, dist, k.value(), chi.value()))
}

#[inline]
fn tensor_integrand_unchecked(u: Position, dist: f64, k: f64, chi: Complex64) -> ComplexTensor3 {
    let q = k * dist;
    let (a, b) = ab_unchecked(q);
    let pref = chi * Complex64::cis(2.0 * q) * (k.powi(4) / (16.0 * PI * PI));
    let unit = (u * (1.0 / dist)).to_array();
    ComplexTensor3::isotropic_plus_dyad(a * a * pref, (b * b - 2.0 * a * b) * pref, unit)
}

/// Scalar integrand `[a² + (b² - 2ab) w/u²] e^{2iq}` for an axis dipole.
/// The susceptibility and the `3k³/8π` prefactor are left to the caller.
pub fn rate_integrand(s: Position, r_a: Position, k: Wavenumber, axis: RateAxis) -> Result<Complex64> {
    let (u, dist) = separation(s, r_a)?;
    Ok(scalar_integrand_unchecked(u, dist, k.value(), axis))
}

#[inline]
fn scalar_integrand_unchecked(u: Position, dist: f64, k: f64, axis: RateAxis) -> Complex64 {
    let q = k * dist;
    let (a, b) = ab_unchecked(q);
    let offset = match axis {
        RateAxis::ParallelX => u.x,
        RateAxis::ParallelY => u.y,
        RateAxis::PerpendicularZ => u.z,
    };
    let w = offset * offset / (dist * dist);
    (a * a + (b * b - 2.0 * a * b) * w) * Complex64::cis(2.0 * q)
}

/// `3k³/8π`, the factor between the scalar integral and `Γ/Γ₀ - 1`.
pub fn scalar_prefactor(k: Wavenumber) -> f64 {
    3.0 * k.value().powi(3) / (8.0 * PI)
}

fn check_emitter(geom: &PlateGeometry, emitter: &EmitterConfig) -> Result<Box3> {
    let bounds = geom.bounds();
    if !emitter.position.is_finite() {
        return Err(Error::Geometry("emitter position must be finite".into()));
    }
    if bounds.distance_to(emitter.position) <= 0.0 {
        return Err(Error::Geometry(format!(
            "emitter at {:?} is inside or on the plate",
            emitter.position
        )));
    }
    Ok(bounds)
}

fn finish(
    outcome: std::result::Result<crate::cubature::Integral, CubatureError>,
    chi: Susceptibility,
) -> Result<RateResult> {
    let flags = RateFlags {
        strong_contrast: chi.is_strong(),
        ..RateFlags::default()
    };
    match outcome {
        Ok(r) => Ok(RateResult {
            rate: 1.0 + r.value.re,
            error_estimate: r.error_estimate,
            evaluations: r.evaluations,
            flags,
        }),
        Err(CubatureError::NotConverged(best)) => Err(Error::Convergence {
            value: 1.0 + best.value.re,
            error_estimate: best.error_estimate,
            evaluations: best.evaluations,
        }),
        Err(e) => Err(e.into()),
    }
}

/// `Γ/Γ₀` at the transition wavenumber for an emitter near the plate.
///
/// Axis-aligned dipoles go through the scalar integrand; any other direction
/// uses the full tensor. A non-converged integral is reported as
/// [`Error::Convergence`] carrying the best rate estimate.
pub fn decay_rate(
    geom: &PlateGeometry,
    emitter: &EmitterConfig,
    chi: Susceptibility,
    quad: &QuadratureSpec,
) -> Result<RateResult> {
    match emitter.dipole.axis() {
        Some(axis) => decay_rate_scalar(geom, emitter.position, axis, chi, quad),
        None => decay_rate_tensor(geom, emitter, chi, quad),
    }
}

/// Scalar route for an axis dipole.
pub fn decay_rate_scalar(
    geom: &PlateGeometry,
    position: Position,
    axis: RateAxis,
    chi: Susceptibility,
    quad: &QuadratureSpec,
) -> Result<RateResult> {
    let emitter = EmitterConfig::new(position, axis.dipole());
    let bounds = check_emitter(geom, &emitter)?;
    quad.validate()?;
    if chi.is_zero() {
        return Ok(RateResult::vacuum());
    }
    let k = Wavenumber::TRANSITION;
    let pref = scalar_prefactor(k);
    let chi_v = chi.value();
    let kv = k.value();
    let f = move |s: Position| {
        let u = position - s;
        let dist = u.norm();
        Complex64::new(pref * (chi_v * scalar_integrand_unchecked(u, dist, kv, axis)).im, 0.0)
    };
    finish(integrate_box_with_focus(f, &bounds, quad, position), chi)
}

/// Tensor route, valid for any dipole direction.
pub fn decay_rate_tensor(
    geom: &PlateGeometry,
    emitter: &EmitterConfig,
    chi: Susceptibility,
    quad: &QuadratureSpec,
) -> Result<RateResult> {
    let bounds = check_emitter(geom, emitter)?;
    quad.validate()?;
    if chi.is_zero() {
        return Ok(RateResult::vacuum());
    }
    let k = Wavenumber::TRANSITION.value();
    let pref = 6.0 * PI / k;
    let d = emitter.dipole.components();
    let r_a = emitter.position;
    let chi_v = chi.value();
    let f = move |s: Position| {
        let u = r_a - s;
        let dist = u.norm();
        let t = tensor_integrand_unchecked(u, dist, k, chi_v);
        Complex64::new(pref * t.contract(d).im, 0.0)
    };
    finish(integrate_box_with_focus(f, &bounds, quad, r_a), chi)
}
