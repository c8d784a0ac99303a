// Free-space Green tensor between two points and its coincident-point
// imaginary part.
//
// ```bash
// cargo run --example vacuum_green
// ```

use bornplate::em::{scalar_a, scalar_b, vacuum_green, vacuum_green_imag_coincident};
use bornplate::{Position, Wavenumber};

pub fn run_example() -> bornplate::Result<()> {
    let k = Wavenumber::TRANSITION;
    println!("{:>8} {:>24} {:>24}", "q", "a(q)", "b(q)");
    for q in [0.5, 1.0, 2.0, 10.0] {
        let (a, b) = (scalar_a(q)?, scalar_b(q)?);
        println!("{q:>8} {:>11.6} {:>+11.6}i {:>11.6} {:>+11.6}i", a.re, a.im, b.re, b.im);
    }

    let origin = Position::ORIGIN;
    for r in [Position::new(0.0, 0.0, 1.0), Position::new(0.3, 0.4, 0.0), Position::new(0.0, 0.0, 1e-3)] {
        let g = vacuum_green(r, origin, k)?;
        println!("\nG(r, 0) at r = ({}, {}, {}):", r.x, r.y, r.z);
        for i in 0..3 {
            let row: Vec<String> = (0..3)
                .map(|j| format!("{:>+10.4e}{:>+10.4e}i", g.get(i, j).re, g.get(i, j).im))
                .collect();
            println!("  {}", row.join("  "));
        }
    }

    let im = vacuum_green_imag_coincident(k);
    println!("\nIm G(r, r) = {:.12} * I  (k / 6 pi)", im.get(0, 0).re);
    Ok(())
}

fn main() -> bornplate::Result<()> {
    run_example()
}
