// Thickness dependence of the parallel-dipole rate far above the plate,
// from the stationary-phase estimates.
//
// ```bash
// cargo run --example stationary_phase
// ```

use bornplate::spa::{fresnel_cs, spa_rate_parallel, spa_rate_parallel_infinite};
use bornplate::{PlateGeometry, Susceptibility, Wavenumber};

pub fn run_example() -> bornplate::Result<()> {
    for x in [0.5, 1.0, 2.0, 5.0] {
        let f = fresnel_cs(x);
        println!("C({x}) = {:.12}  S({x}) = {:.12}", f.c, f.s);
    }

    let k = Wavenumber::TRANSITION;
    let chi = Susceptibility::new(0.1, 1e-8)?;
    let z_a = 5.0;
    println!("\nz_A = {z_a}, 10 x 10 plate");
    println!("{:>6} {:>16} {:>16}", "d_z", "finite - 1", "infinite - 1");
    for i in 0..=24 {
        let d = 0.3 + 0.1 * i as f64;
        let fin = spa_rate_parallel(z_a, &PlateGeometry::new(10.0, 10.0, d)?, chi, k)?;
        let inf = spa_rate_parallel_infinite(z_a, d, chi, k)?;
        println!("{d:>6.2} {:>+16.6e} {:>+16.6e}", fin.excess(), inf.excess());
    }
    Ok(())
}

fn main() -> bornplate::Result<()> {
    run_example()
}
