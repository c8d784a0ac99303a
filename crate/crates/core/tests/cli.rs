use std::path::Path;
use std::process::{Command, Output};

fn bornplate(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bornplate"))
        .args(args)
        .output()
        .expect("binary should start")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const CONFIG: &str = r#"
[[scenario]]
name = "cube"
method = "born"
orientation = "x"
chi = { re = 0.1, im = 1e-8 }
geometry = { dx = 0.4, dy = 0.4, dz = 0.4 }
emitter = { x = 0.0, y = 0.0, z = 0.0 }
sweep = { axis = "z_a", start = 0.2, stop = 0.8, count = 4 }

[[scenario]]
name = "slab"
method = "slab_linear"
orientation = "z"
chi = { re = 0.1, im = 1e-8 }
geometry = { dx = 1.0, dy = 1.0, dz = 0.2 }
emitter = { x = 0.0, y = 0.0, z = 0.5 }
sweep = { axis = "d_z", start = 0.1, stop = 1.0, count = 5 }
"#;

fn write_config(dir: &Path, text: &str) -> String {
    let path = dir.join("sweep.toml");
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn rate_prints_header_and_one_row() {
    let o = bornplate(&["--reproducible", "rate", "--method", "slab", "--orientation", "x", "--z", "0.5"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0], "sweep_name,sweep_value,method,orientation,rate,error_estimate,evaluations,flag");
    assert!(lines[1].starts_with("rate,0.5,slab,x,1.000363055"), "{}", lines[1]);
}

#[test]
fn sweep_output_is_byte_identical_between_runs() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), CONFIG);
    let a = bornplate(&["--reproducible", "sweep", &cfg]);
    let b = bornplate(&["--reproducible", "--threads", "2", "sweep", &cfg]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(text.lines().count(), 1 + 4 + 5);
    assert!(!text.starts_with('#'));

    let stamped = bornplate(&["sweep", &cfg]);
    let stamped = stdout(&stamped);
    assert!(stamped.starts_with("# generated "));
    assert_eq!(stamped.lines().skip(1).collect::<Vec<_>>(), text.lines().collect::<Vec<_>>());
}

#[test]
fn sweep_rows_are_ascending_per_scenario() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), CONFIG);
    let out = dir.path().join("out.csv");
    let o = bornplate(&["--reproducible", "sweep", &cfg, "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let mut reader = csv::Reader::from_path(&out).unwrap();
    let rows: Vec<(String, f64)> = reader
        .records()
        .map(|r| {
            let r = r.unwrap();
            (r[0].to_string(), r[1].parse().unwrap())
        })
        .collect();
    for name in ["cube", "slab"] {
        let xs: Vec<f64> = rows.iter().filter(|r| r.0 == name).map(|r| r.1).collect();
        assert!(xs.windows(2).all(|w| w[0] < w[1]), "{name}: {xs:?}");
    }
}

#[test]
fn tolerance_flag_reaches_the_cubature() {
    let coarse = bornplate(&["--reproducible", "--tol", "1e-3", "rate", "--dx", "0.4", "--dy", "0.4", "--z", "0.3"]);
    let fine = bornplate(&["--reproducible", "--tol", "1e-8", "rate", "--dx", "0.4", "--dy", "0.4", "--z", "0.3"]);
    let evals = |o: &Output| -> u64 { stdout(o).lines().nth(1).unwrap().split(',').nth(6).unwrap().parse().unwrap() };
    assert!(evals(&fine) > evals(&coarse));
}

#[test]
fn bad_input_exits_nonzero() {
    let dir = tempfile::tempdir().unwrap();
    let typo = write_config(dir.path(), &CONFIG.replacen("dz = 0.4", "dzz = 0.4", 1));
    let o = bornplate(&["sweep", &typo]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("dzz"));

    assert!(!bornplate(&["sweep", "/nonexistent/file.toml"]).status.success());
    assert!(!bornplate(&["preset", "fig9"]).status.success());
    assert!(!bornplate(&["rate", "--z", "-0.1"]).status.success());
    assert!(!bornplate(&["rate", "--orientation", "1,2"]).status.success());
}

#[test]
fn preset_dump_round_trips_through_sweep_parser() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig4_inset.toml");
    let o = bornplate(&["preset", "fig4_inset", "--dump", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let parsed = bornplate::scenario::ScenarioFile::parse(&text).unwrap();
    assert_eq!(parsed.scenario, bornplate::scenario::preset(bornplate::scenario::PresetName::Fig4Inset));
}

#[test]
fn preset_run_writes_csv_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("inset.csv");
    let o = bornplate(&["--reproducible", "preset", "fig4_inset", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 1 + 3 * 120);
}

#[test]
fn selftest_passes() {
    let o = bornplate(&["selftest", "--seed", "3"]);
    let text = stdout(&o);
    assert!(o.status.success(), "{text}");
    assert!(text.lines().all(|l| l.starts_with("PASS")));
}
