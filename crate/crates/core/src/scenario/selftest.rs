//! Quick invariant checks run by the `selftest` subcommand.

use std::fmt;

use crate::born::{decay_rate, Dipole, EmitterConfig, PlateGeometry, Susceptibility};
use crate::cubature::{mc_integrate, Box3, McSpec, QuadratureSpec};
use crate::em::{vacuum_green, vacuum_green_imag_coincident, Position, Wavenumber};
use crate::slab::{slab_rate, slab_rate_linearized, SlabConfig, SlabOrientation};
use crate::spa::{fresnel_cs, spa_rate_parallel, spa_rate_parallel_infinite};

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

fn check(name: &'static str, run: impl FnOnce() -> crate::Result<(bool, String)>) -> Check {
    match run() {
        Ok((passed, detail)) => Check { name, passed, detail },
        Err(e) => Check {
            name,
            passed: false,
            detail: format!("error: {e}"),
        },
    }
}

/// Runs the checks. `seed` drives the Monte-Carlo comparison.
pub fn run(seed: u64) -> Vec<Check> {
    let k = Wavenumber::TRANSITION;
    let vac = Susceptibility::zero();
    let quad = QuadratureSpec::default();
    vec![
        check("vacuum_identity", || {
            let geom = PlateGeometry::new(1.0, 1.0, 0.2)?;
            let mut worst: f64 = 0.0;
            for d in [Dipole::X, Dipole::Z] {
                let r = decay_rate(&geom, &EmitterConfig::on_axis(0.5, d), vac, &quad)?;
                worst = worst.max((r.rate - 1.0).abs());
            }
            let cfg = SlabConfig::from_susceptibility(vac, 0.2, 0.5)?;
            for o in [SlabOrientation::Parallel, SlabOrientation::Perpendicular] {
                worst = worst.max((slab_rate(&cfg, o, k)?.rate - 1.0).abs());
                worst = worst.max((slab_rate_linearized(&cfg, o, k)?.rate - 1.0).abs());
            }
            worst = worst.max((spa_rate_parallel(5.0, &geom, vac, k)?.rate - 1.0).abs());
            worst = worst.max((spa_rate_parallel_infinite(5.0, 0.2, vac, k)?.rate - 1.0).abs());
            Ok((worst <= 1e-10, format!("max |rate - 1| = {worst:.1e}")))
        }),
        check("normalization_anchor", || {
            let exact = vacuum_green_imag_coincident(k).get(0, 0).re;
            let g = vacuum_green(Position::new(0.0, 0.0, 1e-4), Position::ORIGIN, k)?;
            let dev = (0..3).map(|i| (g.get(i, i).im - exact).abs()).fold(0.0, f64::max);
            Ok((dev <= 1e-6, format!("|Im G(r,r') - k/6pi| = {dev:.1e} at 1e-4")))
        }),
        check("green_reciprocity", || {
            let r = Position::new(0.3, -0.2, 0.7);
            let rp = Position::new(-0.1, 0.4, 0.05);
            let a = vacuum_green(r, rp, k)?;
            let b = vacuum_green(rp, r, k)?;
            let diff = (0..3)
                .flat_map(|i| (0..3).map(move |j| (i, j)))
                .map(|(i, j)| (a.get(i, j) - b.get(j, i)).norm())
                .fold(0.0, f64::max);
            Ok((diff <= 1e-12 && a.asymmetry() <= 1e-12, format!("max deviation {diff:.1e}")))
        }),
        check("fresnel_special_values", || {
            let one = fresnel_cs(1.0);
            let dev = (one.c - 0.779_893_400_376_822_8).abs().max((one.s - 0.438_259_147_390_354_8).abs());
            let big = fresnel_cs(1e9);
            let ok = dev < 1e-10 && (big.c - 0.5).abs() < 1e-8 && fresnel_cs(0.0).c == 0.0;
            Ok((ok, format!("C,S(1) error {dev:.1e}")))
        }),
        check("slab_linear_order", || {
            let mut devs = Vec::new();
            for chi in [1e-3, 2e-3] {
                let s = Susceptibility::new(chi, 1e-8)?;
                let cfg = SlabConfig::from_susceptibility(s, 0.2, 0.5)?;
                let full = slab_rate(&cfg, SlabOrientation::Perpendicular, k)?.rate;
                let lin = slab_rate_linearized(&cfg, SlabOrientation::Perpendicular, k)?.rate;
                devs.push((full - lin).abs());
            }
            let ratio = devs[1] / devs[0];
            Ok(((ratio - 4.0).abs() < 0.8, format!("second-order ratio {ratio:.3}")))
        }),
        check("born_vs_monte_carlo", || {
            let geom = PlateGeometry::cube(0.4)?;
            let chi = Susceptibility::new(0.1, 1e-8)?;
            let emitter = EmitterConfig::on_axis(0.3, Dipole::Z);
            let cub = decay_rate(&geom, &emitter, chi, &quad)?;
            let r_a = emitter.position;
            let pref = crate::born::scalar_prefactor(k);
            let mc = mc_integrate(
                |s| {
                    crate::born::rate_integrand(s, r_a, k, crate::born::RateAxis::PerpendicularZ)
                        .map(|f| num_complex::Complex64::new(pref * (chi.value() * f).im, 0.0))
                        .unwrap_or_default()
                },
                &geom.bounds(),
                &McSpec { samples: 1_000_000, seed },
            )?;
            let diff = (cub.rate - 1.0 - mc.value.re).abs();
            let sigma = mc.std_error_re.max(1e-300);
            Ok((diff <= 4.0 * sigma, format!("|cubature - mc| = {:.2} sigma", diff / sigma)))
        }),
        check("mc_reproducible", || {
            let spec = McSpec { samples: 20_000, seed };
            let f = |p: Position| num_complex::Complex64::new((p.x * p.y).cos(), p.z);
            let a = mc_integrate(f, &Box3::unit(), &spec)?;
            let b = mc_integrate(f, &Box3::unit(), &spec)?;
            Ok((a == b, "identical estimates for a fixed seed".into()))
        }),
    ]
}
