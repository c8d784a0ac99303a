// The adaptive cubature against the seeded Monte-Carlo estimator on the
// same rate integrand.
//
// ```bash
// cargo run --release --example cubature_vs_monte_carlo
// ```

use bornplate::born::{rate_integrand, scalar_prefactor};
use bornplate::cubature::{integrate_box_with_focus, mc_integrate, McSpec};
use bornplate::{PlateGeometry, Position, QuadratureSpec, RateAxis, Susceptibility, Wavenumber};
use num_complex::Complex64;

pub fn run_example() -> bornplate::Result<()> {
    let k = Wavenumber::TRANSITION;
    let plate = PlateGeometry::cube(0.4)?;
    let chi = Susceptibility::new(0.1, 1e-8)?.value();
    let r_a = Position::new(0.0, 0.0, 0.3);
    let pref = scalar_prefactor(k);
    let f = |s: Position| {
        let g = rate_integrand(s, r_a, k, RateAxis::PerpendicularZ).unwrap_or_default();
        Complex64::new(pref * (chi * g).im, 0.0)
    };

    let cub = integrate_box_with_focus(f, &plate.bounds(), &QuadratureSpec::default(), r_a)?;
    println!(
        "cubature:    {:.10e} +- {:.1e}  ({} evaluations)",
        cub.value.re, cub.error_estimate, cub.evaluations
    );
    for samples in [10_000, 100_000, 1_000_000] {
        let mc = mc_integrate(f, &plate.bounds(), &McSpec { samples, seed: 42 })?;
        let z = (mc.value.re - cub.value.re) / mc.std_error_re;
        println!("mc {samples:>9}: {:.10e} +- {:.1e}  ({z:+.2} sigma)", mc.value.re, mc.std_error_re);
    }
    Ok(())
}

fn main() -> bornplate::Result<()> {
    run_example()
}
