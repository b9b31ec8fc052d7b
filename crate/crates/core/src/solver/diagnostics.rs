use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};

pub const CSV_HEADER: [&str; 7] = [
    "iteration",
    "epsilon",
    "e1",
    "e2",
    "residual",
    "mse_known",
    "mse_unknown",
];

/// Snapshot of a run after a given iteration.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagnosticsRecord {
    pub iteration: usize,
    pub epsilon: f64,
    /// Ginzburg-Landau energy; `None` for the shock-filter variant, which has no potential.
    pub e1: Option<f64>,
    pub e2: f64,
    /// `max |u_{n+1} - u_n|` of the step that produced this state.
    pub residual: f64,
    /// MSE against the input image over the known pixels.
    pub mse_known: f64,
    /// MSE against a ground truth over the inpainting domain, when one is supplied.
    pub mse_unknown: Option<f64>,
}

fn opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Writes records as CSV with the header
/// `iteration,epsilon,e1,e2,residual,mse_known,mse_unknown`; missing values are empty fields.
pub fn write_diagnostics_csv<W: Write>(records: &[DiagnosticsRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record([
            r.iteration.to_string(),
            r.epsilon.to_string(),
            opt(r.e1),
            r.e2.to_string(),
            r.residual.to_string(),
            r.mse_known.to_string(),
            opt(r.mse_unknown),
        ])?;
    }
    w.flush().map_err(|e| Error::Csv(e.into()))
}

pub fn save_diagnostics(records: &[DiagnosticsRecord], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
    write_diagnostics_csv(records, std::io::BufWriter::new(file))
}
