// The built-in sweeps: list them, dump one as a scenario file and run a
// cheap one.
//
// ```bash
// cargo run --release --example presets
// ```

use bornplate::scenario::{presets, run_scenario, write_csv, PresetName, ScenarioFile};

pub fn run_example() -> bornplate::Result<()> {
    let all = presets();
    for name in PresetName::ALL {
        let list = all.get(name);
        let points: usize = list.iter().map(|s| s.sweep.count).sum();
        println!("{name:<11} {:>2} sweeps, {points:>4} points", list.len());
    }

    let inset = all.get(PresetName::Fig4Inset);
    println!("\n{}", ScenarioFile { scenario: inset[..1].to_vec() }.to_toml()?);

    // The stationary-phase sweep costs milliseconds.
    let rows = run_scenario(&inset[0])?;
    let mut csv = Vec::new();
    write_csv(&mut csv, &rows[..10], None)?;
    print!("{}", String::from_utf8_lossy(&csv));
    Ok(())
}

fn main() -> bornplate::Result<()> {
    run_example()
}
