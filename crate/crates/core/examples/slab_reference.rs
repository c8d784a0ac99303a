// Infinite-slab reference rates: exact reflection coefficients against
// their first-order expansion.
//
// ```bash
// cargo run --example slab_reference
// ```

use bornplate::slab::{slab_rate, slab_rate_linearized, slab_reflection, Polarization, SlabConfig, SlabOrientation};
use bornplate::{Susceptibility, Wavenumber};
use num_complex::Complex64;

pub fn run_example() -> bornplate::Result<()> {
    let k = Wavenumber::TRANSITION;
    let eps = Complex64::new(1.5, 1e-8);
    println!("slab reflection, eps = 1.5, d = 0.2");
    for s in [0.0, 0.5, 0.9, 1.1, 2.0] {
        let te = slab_reflection(s, eps, 0.2, k, Polarization::Te)?;
        let tm = slab_reflection(s, eps, 0.2, k, Polarization::Tm)?;
        println!("  s = {s:<4} r_TE = {:+.6} {:+.6}i   r_TM = {:+.6} {:+.6}i", te.re, te.im, tm.re, tm.im);
    }

    println!("\n{:>6} {:>6} {:>14} {:>14}", "chi", "z_A", "parallel", "perpendicular");
    for chi in [0.1, 0.5] {
        let chi = Susceptibility::new(chi, 1e-8)?;
        for z in [0.2, 0.5, 1.0] {
            let cfg = SlabConfig::from_susceptibility(chi, 0.2, z)?;
            let par = slab_rate(&cfg, SlabOrientation::Parallel, k)?.rate;
            let perp = slab_rate(&cfg, SlabOrientation::Perpendicular, k)?.rate;
            let par_lin = slab_rate_linearized(&cfg, SlabOrientation::Parallel, k)?.rate;
            let perp_lin = slab_rate_linearized(&cfg, SlabOrientation::Perpendicular, k)?.rate;
            println!("{:>6} {z:>6} {par:>14.10} {perp:>14.10}  (linear: {par_lin:.10}, {perp_lin:.10})", chi.value().re);
        }
    }
    Ok(())
}

fn main() -> bornplate::Result<()> {
    run_example()
}
