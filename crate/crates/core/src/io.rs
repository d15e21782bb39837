//! File formats: trace export, receiver parameter files and batch inputs.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::receiver::{build_params, ReceiverConstants, ReceiverError, ReceiverParams};
use crate::scalar::Scalar;
use crate::solver::IterationTrace;

#[derive(Debug, Error)]
pub enum IoError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("JSON error at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Receiver(#[from] ReceiverError),
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Json { line: e.line(), column: e.column(), message: e.to_string() }
    }
}

/// Scientific notation with `sig` significant digits and a signed two-digit
/// exponent, e.g. `1.35000E+03`.
pub fn format_sci(v: f64, sig: usize) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    let s = format!("{:.*e}", sig.saturating_sub(1), v);
    let (mantissa, exp) = s.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}E{sign}{:02}", exp.abs())
}

/// Writes `i,x_1,…,x_n,step_norm,residual_norm`, one row per iteration
/// (starting at `i = 1`). Coordinates use the shortest round-trip form,
/// norms [`format_sci`] with six significant digits.
pub fn write_trace_csv<T: Scalar, W: Write>(trace: &IterationTrace<T>, mut w: W) -> Result<(), IoError> {
    let n = trace.iterates.first().map_or(0, Vec::len);
    let mut header = vec!["i".to_string()];
    header.extend((1..=n).map(|k| format!("x_{k}")));
    header.push("step_norm".into());
    header.push("residual_norm".into());
    writeln!(w, "{}", header.join(","))?;
    for (i, x) in trace.iterates.iter().enumerate().skip(1) {
        let mut cells = vec![i.to_string()];
        cells.extend(x.iter().map(|v| format!("{:?}", v.as_f64())));
        cells.push(format_sci(trace.step_norms[i - 1].as_f64(), 6));
        cells.push(format_sci(trace.residual_norms[i - 1].as_f64(), 6));
        writeln!(w, "{}", cells.join(","))?;
    }
    Ok(())
}

pub fn write_trace_json<T: Scalar, W: Write>(trace: &IterationTrace<T>, w: W) -> Result<(), IoError> {
    serde_json::to_writer_pretty(w, trace)?;
    Ok(())
}

/// Parameter file: `{"DNI": …, "T_air": …, "constants": {…overrides…}}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar", deny_unknown_fields)]
pub struct ReceiverInput<T> {
    #[serde(rename = "DNI")]
    pub dni: T,
    #[serde(rename = "T_air")]
    pub t_air: T,
    #[serde(default)]
    pub constants: ReceiverConstants<T>,
}

impl<T: Scalar> ReceiverInput<T> {
    pub fn params(&self) -> Result<ReceiverParams<T>, ReceiverError> {
        build_params(self.dni, self.t_air, &self.constants)
    }
}

pub fn read_receiver_input<T: Scalar, R: Read>(r: R) -> Result<ReceiverInput<T>, IoError> {
    Ok(serde_json::from_reader(r)?)
}

#[derive(Debug, Deserialize)]
struct BatchRow {
    #[serde(rename = "DNI")]
    dni: f64,
    #[serde(rename = "T_air")]
    t_air: f64,
}

/// Reads a CSV with a `DNI,T_air` header.
pub fn read_batch_csv<R: Read>(r: R) -> Result<Vec<(f64, f64)>, IoError> {
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(r);
    reader.deserialize::<BatchRow>().map(|row| row.map(|b| (b.dni, b.t_air)).map_err(IoError::from)).collect()
}
