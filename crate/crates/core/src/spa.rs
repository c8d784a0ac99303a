//! Stationary-phase estimates of the parallel-dipole rate.
//!
//! Expanding the phase `2q` about the plate normal through the emitter turns
//! the lateral integrals into Fresnel integrals:
//!
//! ```text
//! Γ∥/Γ₀ ≈ 1 + (3k³/2π) Im{χ ∫₀^{d_z} dz a²(q_z) e^{2iq_z} L_x(z) L_y(z)},
//! L(z) = ∫₀^{D/2} e^{i (k²/q_z) x²} dx,   q_z = k (z + z_A),
//! ```
//!
//! which for an unbounded plate reduces to
//! `1 + (3k/16) Im{χ ∫₀^{d_z} dz a²(q_z) q_z e^{2iq_z} (1+i)²}`.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::born::{PlateGeometry, RateFlags, RateResult, Susceptibility};
use crate::cubature::{integrate_interval, CubatureError};
use crate::em::{ab_unchecked, Wavenumber};
use crate::error::{Error, Result};

/// Fresnel integrals `C(x) = ∫₀^x cos(πt²/2) dt`, `S(x) = ∫₀^x sin(πt²/2) dt`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FresnelPair {
    pub c: f64,
    pub s: f64,
}

const SERIES_LIMIT: f64 = 1.6;
const SATURATION: f64 = 1e8;

fn fresnel_series(x: f64) -> FresnelPair {
    // Term m is (πx²/2)^m x / m!; even m feed C, odd m feed S.
    let h = FRAC_PI_2 * x * x;
    let mut term = x;
    let (mut c, mut s) = (0.0, 0.0);
    for m in 0..200u32 {
        let contribution = term / f64::from(2 * m + 1);
        let sign = if (m / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if m % 2 == 0 {
            c += sign * contribution;
        } else {
            s += sign * contribution;
        }
        if contribution < 1e-18 * (c.abs() + s.abs()) {
            break;
        }
        term *= h / f64::from(m + 1);
    }
    FresnelPair { c, s }
}

fn fresnel_continued_fraction(x: f64) -> FresnelPair {
    // Modified Lentz evaluation of the complementary error function
    // continued fraction at z = (1 - i) √π x / 2.
    let tiny = 1e-300;
    let pix2 = PI * x * x;
    let one = Complex64::new(1.0, 0.0);
    let mut b = Complex64::new(1.0, -pix2);
    let mut cc = Complex64::new(1.0 / tiny, 0.0);
    let mut d = one / b;
    let mut h = d;
    let mut n = -1.0;
    for _ in 0..500 {
        n += 2.0;
        let a = -n * (n + 1.0);
        b += 4.0;
        d = one / (d * a + b);
        cc = b + a / cc;
        let del = cc * d;
        h *= del;
        if (del.re - 1.0).abs() + del.im.abs() < 1e-16 {
            break;
        }
    }
    h *= Complex64::new(x, -x);
    // πx²/2 reduced modulo 2π through x² mod 4.
    let phase = FRAC_PI_2 * (x * x).rem_euclid(4.0);
    let cs = Complex64::new(0.5, 0.5) * (one - Complex64::cis(phase) * h);
    FresnelPair { c: cs.re, s: cs.im }
}

/// Fresnel cosine and sine integrals; odd in `x` by construction.
pub fn fresnel_cs(x: f64) -> FresnelPair {
    if x.is_nan() {
        return FresnelPair { c: f64::NAN, s: f64::NAN };
    }
    let ax = x.abs();
    let p = if ax == 0.0 {
        FresnelPair { c: 0.0, s: 0.0 }
    } else if ax <= SERIES_LIMIT {
        fresnel_series(ax)
    } else if ax < SATURATION {
        fresnel_continued_fraction(ax)
    } else {
        FresnelPair { c: 0.5, s: 0.5 }
    };
    if x < 0.0 {
        FresnelPair { c: -p.c, s: -p.s }
    } else {
        p
    }
}

/// `∫₀^half e^{i α x²} dx` with `α = k²/q`.
fn lateral_factor(half: f64, alpha: f64) -> Complex64 {
    let scale = (2.0 * alpha / PI).sqrt();
    let f = fresnel_cs(half * scale);
    Complex64::new(f.c, f.s) / scale
}

const OUTER_REL_TOL: f64 = 1e-7;
const OUTER_ABS_TOL: f64 = 1e-15;
const MAX_INTERVALS: usize = 20_000;

fn check_inputs(z_a: f64, d_z: f64) -> Result<()> {
    if !(z_a.is_finite() && z_a > 0.0) {
        return Err(Error::Geometry(format!("emitter height must be positive, got {z_a}")));
    }
    if !(d_z.is_finite() && d_z > 0.0) {
        return Err(Error::Geometry(format!("plate thickness must be positive, got {d_z}")));
    }
    Ok(())
}

fn flags(z_a: f64, k: Wavenumber, chi: Susceptibility) -> RateFlags {
    RateFlags {
        strong_contrast: chi.is_strong(),
        paraxial: z_a < 2.0 * PI / k.value(),
        unconverged: false,
    }
}

fn assemble(
    outcome: std::result::Result<crate::cubature::Integral, CubatureError>,
    chi: Susceptibility,
    prefactor: f64,
    flags: RateFlags,
) -> Result<RateResult> {
    match outcome {
        Ok(r) => Ok(RateResult {
            rate: 1.0 + prefactor * (chi.value() * r.value).im,
            error_estimate: prefactor * chi.value().norm() * r.error_estimate,
            evaluations: r.evaluations,
            flags,
        }),
        Err(CubatureError::NotConverged(best)) => Err(Error::Convergence {
            value: 1.0 + prefactor * (chi.value() * best.value).im,
            error_estimate: prefactor * chi.value().norm() * best.error_estimate,
            evaluations: best.evaluations,
        }),
        Err(e) => Err(e.into()),
    }
}

/// Stationary-phase `Γ∥/Γ₀` for an emitter at `(0, 0, z_a)` above a finite plate.
pub fn spa_rate_parallel(z_a: f64, geom: &PlateGeometry, chi: Susceptibility, k: Wavenumber) -> Result<RateResult> {
    check_inputs(z_a, geom.dz)?;
    let flags = flags(z_a, k, chi);
    if chi.is_zero() {
        return Ok(RateResult { flags, ..RateResult::vacuum() });
    }
    let kv = k.value();
    let (hx, hy) = (0.5 * geom.dx, 0.5 * geom.dy);
    let integrand = |z: f64| {
        let q = kv * (z + z_a);
        let (a, _) = ab_unchecked(q);
        let alpha = kv * kv / q;
        a * a * Complex64::cis(2.0 * q) * lateral_factor(hx, alpha) * lateral_factor(hy, alpha)
    };
    let outcome = integrate_interval(integrand, 0.0, geom.dz, OUTER_REL_TOL, OUTER_ABS_TOL, MAX_INTERVALS);
    assemble(outcome, chi, 3.0 * kv.powi(3) / (2.0 * PI), flags)
}

/// Unbounded-plate limit of [`spa_rate_parallel`].
pub fn spa_rate_parallel_infinite(z_a: f64, d_z: f64, chi: Susceptibility, k: Wavenumber) -> Result<RateResult> {
    check_inputs(z_a, d_z)?;
    let flags = flags(z_a, k, chi);
    if chi.is_zero() {
        return Ok(RateResult { flags, ..RateResult::vacuum() });
    }
    let kv = k.value();
    // (1 + i)² = 2i
    let two_i = Complex64::new(0.0, 2.0);
    let integrand = |z: f64| {
        let q = kv * (z + z_a);
        let (a, _) = ab_unchecked(q);
        a * a * q * Complex64::cis(2.0 * q) * two_i
    };
    let outcome = integrate_interval(integrand, 0.0, d_z, OUTER_REL_TOL, OUTER_ABS_TOL, MAX_INTERVALS);
    assemble(outcome, chi, 3.0 * kv / 16.0, flags)
}
