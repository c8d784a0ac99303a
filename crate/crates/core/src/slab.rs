//! Decay rates above an infinitely extended slab.
//!
//! With `s` the lateral wavevector in units of `k`, `s_z = √(1 - s²)` and
//! `s_z1 = √(ε - s²)` (both with `Im ≥ 0`), the rates of an emitter at
//! height `z_A` above a slab of thickness `d` are
//!
//! ```text
//! Γ⊥/Γ₀ = 1 + (3/2) Re ∫₀^∞ ds (s³/s_z) r_TM e^{2ik z_A s_z}
//! Γ∥/Γ₀ = 1 + (3/4) Re ∫₀^∞ ds (s/s_z) [r_TE - s_z² r_TM] e^{2ik z_A s_z}
//! ```
//!
//! where `r` is the two-interface (Airy) reflection coefficient.
//!
//! The integrand has guided-mode poles just above the real axis for
//! `1 < s < √Re ε` whose width is set by `Im ε`, and the first-order
//! coefficients have a pole at grazing incidence `s = 1`. Both sit above the
//! real axis under the outgoing-wave prescription, so the `s` path dips
//! below it along a half ellipse from `0` to `s_e` before returning to the
//! real axis for the evanescent tail.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::born::{RateFlags, RateResult, Susceptibility};
use crate::cubature::{integrate_interval, CubatureError, Integral};
use crate::em::Wavenumber;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polarization {
    Te,
    Tm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SlabOrientation {
    Parallel,
    Perpendicular,
}

/// Emitter above a slab occupying `-d ≤ z ≤ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlabConfig {
    pub epsilon: Complex64,
    pub thickness: f64,
    pub height: f64,
}

impl SlabConfig {
    pub fn new(epsilon: Complex64, thickness: f64, height: f64) -> Result<Self> {
        if !(epsilon.re.is_finite() && epsilon.im.is_finite()) || epsilon.im < 0.0 {
            return Err(Error::Domain(format!(
                "slab permittivity must be finite with Im ε >= 0, got {epsilon}"
            )));
        }
        if !(thickness.is_finite() && thickness > 0.0) {
            return Err(Error::Geometry(format!("slab thickness must be positive, got {thickness}")));
        }
        if !(height.is_finite() && height > 0.0) {
            return Err(Error::Geometry(format!("emitter height must be positive, got {height}")));
        }
        Ok(SlabConfig {
            epsilon,
            thickness,
            height,
        })
    }

    pub fn from_susceptibility(chi: Susceptibility, thickness: f64, height: f64) -> Result<Self> {
        Self::new(chi.permittivity(), thickness, height)
    }

    pub fn chi(&self) -> Complex64 {
        self.epsilon - 1.0
    }
}

/// `√(ε - s²)` on the branch with non-negative imaginary part.
#[inline]
pub fn vertical_component(s: Complex64, eps: Complex64) -> Complex64 {
    let v = (eps - s * s).sqrt();
    let v = if v.im < 0.0 || (v.im == 0.0 && v.re < 0.0) { -v } else { v };
    debug_assert!(v.im >= 0.0);
    v
}

#[inline]
fn interface_r(sz: Complex64, sz1: Complex64, eps: Complex64, pol: Polarization) -> Complex64 {
    if eps == Complex64::new(1.0, 0.0) {
        return Complex64::new(0.0, 0.0);
    }
    match pol {
        Polarization::Te => (sz - sz1) / (sz + sz1),
        Polarization::Tm => (eps * sz - sz1) / (eps * sz + sz1),
    }
}

#[inline]
fn airy(s: Complex64, eps: Complex64, kd: f64, pol: Polarization) -> Complex64 {
    let sz = vertical_component(s, Complex64::new(1.0, 0.0));
    let sz1 = vertical_component(s, eps);
    let r1 = interface_r(sz, sz1, eps, pol);
    let round_trip = (Complex64::i() * 2.0 * kd * sz1).exp();
    r1 * (1.0 - round_trip) / (1.0 - r1 * r1 * round_trip)
}

/// Airy reflection coefficient to first order in `χ = ε - 1`.
#[inline]
fn airy_linear(s: Complex64, chi: Complex64, kd: f64, pol: Polarization) -> Complex64 {
    let sz = vertical_component(s, Complex64::new(1.0, 0.0));
    let sz2 = sz * sz;
    let thin = 1.0 - (Complex64::i() * 2.0 * kd * sz).exp();
    match pol {
        Polarization::Te => -chi * thin / (4.0 * sz2),
        Polarization::Tm => chi * (2.0 * sz2 - 1.0) * thin / (4.0 * sz2),
    }
}

fn check_lateral(s: f64) -> Result<()> {
    if s.is_finite() && s >= 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("lateral wavevector must be >= 0, got {s}")))
    }
}

/// Single-interface Fresnel coefficient from vacuum into a medium of
/// permittivity `eps`, as a function of the normalized lateral wavevector.
pub fn fresnel_r(s: f64, eps: Complex64, pol: Polarization) -> Result<Complex64> {
    check_lateral(s)?;
    let s = Complex64::new(s, 0.0);
    let sz = vertical_component(s, Complex64::new(1.0, 0.0));
    let sz1 = vertical_component(s, eps);
    Ok(interface_r(sz, sz1, eps, pol))
}

/// Reflection coefficient of a slab of thickness `d` in vacuum.
pub fn slab_reflection(s: f64, eps: Complex64, d: f64, k: Wavenumber, pol: Polarization) -> Result<Complex64> {
    check_lateral(s)?;
    if !(d.is_finite() && d >= 0.0) {
        return Err(Error::Geometry(format!("slab thickness must be >= 0, got {d}")));
    }
    Ok(airy(Complex64::new(s, 0.0), eps, k.value() * d, pol))
}

/// First-order-in-χ slab reflection coefficient.
pub fn slab_reflection_linear(s: f64, chi: Complex64, d: f64, k: Wavenumber, pol: Polarization) -> Result<Complex64> {
    check_lateral(s)?;
    if !(d.is_finite() && d >= 0.0) {
        return Err(Error::Geometry(format!("slab thickness must be >= 0, got {d}")));
    }
    Ok(airy_linear(Complex64::new(s, 0.0), chi, k.value() * d, pol))
}

const PATH_DEPTH: f64 = 0.25;
const TAIL_EXPONENT: f64 = 40.0;
const REL_TOL: f64 = 1e-10;
const ABS_TOL: f64 = 1e-14;
const MAX_INTERVALS: usize = 20_000;

/// Where the deformed path returns to the real axis.
fn path_end(eps: Complex64) -> f64 {
    1.0f64.max(eps.sqrt().re) + 0.5
}

/// Half ellipse from `0` to `s_e` below the real axis.
#[inline]
fn ellipse(t: f64, s_e: f64) -> (Complex64, Complex64) {
    let (sin, cos) = t.sin_cos();
    let s = Complex64::new(0.5 * s_e * (1.0 - cos), -PATH_DEPTH * sin);
    let ds = Complex64::new(0.5 * s_e * sin, -PATH_DEPTH * cos);
    (s, ds)
}

fn rate_integral<R>(reflection: R, s_e: f64, height: f64, k: f64, orientation: SlabOrientation) -> std::result::Result<Integral, CubatureError>
where
    R: Fn(Complex64, Polarization) -> Complex64,
{
    let integrand = |s: Complex64| -> Complex64 {
        let sz = vertical_component(s, Complex64::new(1.0, 0.0));
        let phase = (Complex64::i() * 2.0 * k * height * sz).exp();
        match orientation {
            SlabOrientation::Perpendicular => 1.5 * s * s * s / sz * reflection(s, Polarization::Tm) * phase,
            SlabOrientation::Parallel => {
                let te = reflection(s, Polarization::Te);
                let tm = reflection(s, Polarization::Tm);
                0.75 * s / sz * (te - sz * sz * tm) * phase
            }
        }
    };
    let near = integrate_interval(
        |t| {
            let (s, ds) = ellipse(t, s_e);
            integrand(s) * ds
        },
        0.0,
        PI,
        REL_TOL,
        ABS_TOL,
        MAX_INTERVALS,
    )?;
    let kappa_max = TAIL_EXPONENT / (2.0 * k * height);
    let s_max = (1.0 + kappa_max * kappa_max).sqrt().max(s_e + 1.0);
    let tail = integrate_interval(
        |s| integrand(Complex64::new(s, 0.0)),
        s_e,
        s_max,
        REL_TOL,
        ABS_TOL,
        MAX_INTERVALS,
    )?;
    Ok(Integral {
        value: near.value + tail.value,
        error_estimate: near.error_estimate + tail.error_estimate,
        evaluations: near.evaluations + tail.evaluations,
    })
}

fn to_rate(outcome: std::result::Result<Integral, CubatureError>, flags: RateFlags) -> Result<RateResult> {
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

/// Exact-reflection decay rate above the slab.
pub fn slab_rate(config: &SlabConfig, orientation: SlabOrientation, k: Wavenumber) -> Result<RateResult> {
    let eps = config.epsilon;
    if eps == Complex64::new(1.0, 0.0) {
        return Ok(RateResult::vacuum());
    }
    let kd = k.value() * config.thickness;
    let outcome = rate_integral(
        |s, pol| airy(s, eps, kd, pol),
        path_end(eps),
        config.height,
        k.value(),
        orientation,
    );
    to_rate(outcome, RateFlags::default())
}

/// Decay rate with the reflection coefficients expanded to first order in
/// χ, the infinite-slab counterpart of the first-order Born plate rate.
pub fn slab_rate_linearized(config: &SlabConfig, orientation: SlabOrientation, k: Wavenumber) -> Result<RateResult> {
    let chi = config.chi();
    if chi == Complex64::new(0.0, 0.0) {
        return Ok(RateResult::vacuum());
    }
    let kd = k.value() * config.thickness;
    let outcome = rate_integral(
        |s, pol| airy_linear(s, chi, kd, pol),
        path_end(config.epsilon),
        config.height,
        k.value(),
        orientation,
    );
    to_rate(outcome, RateFlags::default())
}
