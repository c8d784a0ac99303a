// Decay rate of an emitter above a finite plate, to first order in the
// susceptibility.
//
// ```bash
// cargo run --release --example plate_rate
// ```

use bornplate::{decay_rate, Dipole, EmitterConfig, PlateGeometry, Position, QuadratureSpec, Susceptibility};

pub fn run_example() -> bornplate::Result<()> {
    let plate = PlateGeometry::new(2.0, 2.0, 0.2)?;
    let chi = Susceptibility::new(0.1, 1e-8)?;
    let quad = QuadratureSpec::default();

    println!("2 x 2 x 0.2 plate, chi = 0.1 + 1e-8i");
    println!("{:>6} {:>8} {:>14} {:>10} {:>12}", "z_A", "dipole", "rate", "error", "evaluations");
    for z in [0.1, 0.3, 1.0] {
        for (name, d) in [("x", Dipole::X), ("z", Dipole::Z), ("tilted", Dipole::along([1.0, 0.0, 1.0])?)] {
            let r = decay_rate(&plate, &EmitterConfig::new(Position::new(0.0, 0.0, z), d), chi, &quad)?;
            println!("{z:>6} {name:>8} {:>14.10} {:>10.2e} {:>12}", r.rate, r.error_estimate, r.evaluations);
        }
    }

    // Off-axis emitter beyond the plate edge.
    let r = decay_rate(&plate, &EmitterConfig::new(Position::new(1.5, 0.0, 0.1), Dipole::X), chi, &quad)?;
    println!("\nemitter at (1.5, 0, 0.1), x dipole: rate {:.10} [{}]", r.rate, r.flags);
    Ok(())
}

fn main() -> bornplate::Result<()> {
    run_example()
}
