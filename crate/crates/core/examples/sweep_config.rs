// Parse a scenario file, run it and print the CSV.
//
// ```bash
// cargo run --release --example sweep_config
// ```

use bornplate::scenario::{run_all, write_csv, ScenarioFile};

const CONFIG: &str = r#"
[[scenario]]
name = "slab_height"
method = "slab"
orientation = "z"
chi = { re = 0.5, im = 1e-8 }
geometry = { dx = 10.0, dy = 10.0, dz = 0.2 }
emitter = { x = 0.0, y = 0.0, z = 0.0 }
sweep = { axis = "z_a", start = 0.1, stop = 1.0, count = 10 }

[[scenario]]
name = "cube_height"
method = "born"
orientation = [1.0, 0.0, 1.0]
chi = { re = 0.1, im = 1e-8 }
geometry = { dx = 0.4, dy = 0.4, dz = 0.4 }
emitter = { x = 0.0, y = 0.0, z = 0.0 }
sweep = { axis = "z_a", start = 0.1, stop = 1.0, count = 4 }

[scenario.quadrature]
rel_tol = 1e-6
"#;

pub fn run_example() -> bornplate::Result<()> {
    let file = ScenarioFile::parse(CONFIG)?;
    let rows = run_all(&file.scenario)?;
    let mut csv = Vec::new();
    write_csv(&mut csv, &rows, None)?;
    print!("{}", String::from_utf8_lossy(&csv));
    Ok(())
}

fn main() -> bornplate::Result<()> {
    run_example()
}
