use std::io::Write;

use super::SweepRow;
use crate::error::{Error, Result};

pub const CSV_HEADER: [&str; 8] = [
    "sweep_name",
    "sweep_value",
    "method",
    "orientation",
    "rate",
    "error_estimate",
    "evaluations",
    "flag",
];

/// Writes rows as CSV. A `# generated ...` comment line leads the output
/// when `timestamp` is given.
pub fn write_csv<W: Write>(mut out: W, rows: &[SweepRow], timestamp: Option<&str>) -> Result<()> {
    let io = |e: std::io::Error| Error::Config(format!("write failed: {e}"));
    if let Some(ts) = timestamp {
        writeln!(out, "# generated {ts}").map_err(io)?;
    }
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    let csv_err = |e: csv::Error| Error::Config(format!("csv write failed: {e}"));
    w.write_record(CSV_HEADER).map_err(csv_err)?;
    for r in rows {
        w.serialize(r).map_err(csv_err)?;
    }
    w.flush().map_err(io)?;
    Ok(())
}
