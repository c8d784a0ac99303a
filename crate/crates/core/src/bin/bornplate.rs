use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand};

use bornplate::scenario::{
    self, selftest, AxisName, Method, Orientation, PresetName, Scenario, ScenarioFile, SweepRow,
};
use bornplate::{Error, PlateGeometry, Position, QuadratureSpec, Result, Susceptibility};

#[derive(Parser)]
#[command(name = "bornplate", version, about = "Decay rate of an emitter near a finite dielectric plate")]
struct Cli {
    /// Relative tolerance for the adaptive cubature.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Omit the timestamp comment so output is byte-identical between runs.
    #[arg(long, global = true)]
    reproducible: bool,
    /// Seed for the Monte-Carlo check in `selftest`.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a single configuration and print one CSV row.
    Rate {
        #[arg(long, value_parser = parse_method, default_value = "born")]
        method: Method,
        /// x, y, z or a direction "dx,dy,dz".
        #[arg(long, value_parser = parse_orientation, default_value = "z")]
        orientation: Orientation,
        #[arg(long, default_value_t = 0.1)]
        chi_re: f64,
        #[arg(long, default_value_t = 1e-8)]
        chi_im: f64,
        #[arg(long, default_value_t = 10.0)]
        dx: f64,
        #[arg(long, default_value_t = 10.0)]
        dy: f64,
        #[arg(long, default_value_t = 0.2)]
        dz: f64,
        #[arg(long, default_value_t = 0.0)]
        x: f64,
        #[arg(long, default_value_t = 0.0)]
        y: f64,
        #[arg(long, default_value_t = 0.5)]
        z: f64,
    },
    /// Run every scenario in a TOML file.
    Sweep {
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a built-in preset: fig2, fig3, fig4, fig4_inset or fig5.
    Preset {
        name: PresetName,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the preset as a scenario file instead of running it.
        #[arg(long)]
        dump: bool,
    },
    /// Run the built-in invariant checks.
    Selftest,
}

fn parse_method(s: &str) -> std::result::Result<Method, String> {
    toml::Value::String(s.into()).try_into().map_err(|_| {
        format!("unknown method '{s}' (expected born, slab, slab_linear, spa or spa_infinite)")
    })
}

fn parse_orientation(s: &str) -> std::result::Result<Orientation, String> {
    match s {
        "x" => Ok(Orientation::Axis(AxisName::X)),
        "y" => Ok(Orientation::Axis(AxisName::Y)),
        "z" => Ok(Orientation::Axis(AxisName::Z)),
        _ => {
            let parts: Vec<f64> = s
                .split(',')
                .map(|p| p.trim().parse::<f64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| format!("bad orientation '{s}': {e}"))?;
            <[f64; 3]>::try_from(parts)
                .map(Orientation::Vector)
                .map_err(|_| format!("orientation '{s}' needs three components"))
        }
    }
}

fn timestamp(reproducible: bool) -> Option<String> {
    if reproducible {
        return None;
    }
    let secs = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
    Some(format!("unix {secs}"))
}

fn emit(rows: &[SweepRow], out: Option<&PathBuf>, reproducible: bool) -> Result<()> {
    let ts = timestamp(reproducible);
    match out {
        Some(path) => {
            let file = File::create(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
            scenario::write_csv(BufWriter::new(file), rows, ts.as_deref())
        }
        None => scenario::write_csv(io::stdout().lock(), rows, ts.as_deref()),
    }
}

fn with_tol(mut scenarios: Vec<Scenario>, tol: Option<f64>) -> Vec<Scenario> {
    if let Some(t) = tol {
        for sc in &mut scenarios {
            sc.quadrature.rel_tol = t;
        }
    }
    scenarios
}

fn run(cli: Cli) -> Result<bool> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    }
    match cli.command {
        Command::Rate {
            method,
            orientation,
            chi_re,
            chi_im,
            dx,
            dy,
            dz,
            x,
            y,
            z,
        } => {
            let quadrature = match cli.tol {
                Some(t) => QuadratureSpec::default().with_rel_tol(t),
                None => QuadratureSpec::default(),
            };
            let point = scenario::Point {
                method,
                orientation,
                chi: Susceptibility::new(chi_re, chi_im)?,
                geometry: PlateGeometry::new(dx, dy, dz)?,
                emitter: Position::new(x, y, z),
                quadrature,
            };
            let r = point.evaluate_flagged()?;
            let row = SweepRow {
                sweep_name: "rate".into(),
                sweep_value: z,
                method: method.as_str().into(),
                orientation: orientation.label(),
                rate: r.rate,
                error_estimate: r.error_estimate,
                evaluations: r.evaluations,
                flag: r.flags.to_string(),
            };
            emit(&[row], None, cli.reproducible)?;
        }
        Command::Sweep { config, out } => {
            let text = std::fs::read_to_string(&config)
                .map_err(|e| Error::Config(format!("{}: {e}", config.display())))?;
            let file = ScenarioFile::parse(&text)?;
            let rows = scenario::run_all(&with_tol(file.scenario, cli.tol))?;
            emit(&rows, out.as_ref(), cli.reproducible)?;
        }
        Command::Preset { name, out, dump } => {
            let scenarios = with_tol(scenario::preset(name), cli.tol);
            if dump {
                let text = ScenarioFile { scenario: scenarios }.to_toml()?;
                match out {
                    Some(path) => std::fs::write(&path, text)
                        .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?,
                    None => print!("{text}"),
                }
            } else {
                let rows = scenario::run_all(&scenarios)?;
                emit(&rows, out.as_ref(), cli.reproducible)?;
            }
        }
        Command::Selftest => {
            let checks = selftest::run(cli.seed);
            let mut stdout = io::stdout().lock();
            for c in &checks {
                let _ = writeln!(stdout, "{c}");
            }
            return Ok(checks.iter().all(|c| c.passed));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
