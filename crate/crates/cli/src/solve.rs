use std::io::Write;
use std::path::Path;

use anyhow::Result;
use fracsolve::io::{write_trace_csv, write_trace_json};
use fracsolve::{classify, estimate_order, iterate, ConvergenceReport, MethodSpec, SolverConfig, Termination};
use serde::Serialize;
use serde_json::json;

use crate::options::Problem;
use crate::output::{num, OutDir, RunManifest};
use crate::{EXIT_NOT_CONVERGED, EXIT_OK, EXIT_SINGULAR};

#[derive(Serialize)]
struct SolveReport<'a> {
    converged: bool,
    termination: &'a Termination,
    iterations: usize,
    final_x: &'a [f64],
    final_residual: f64,
    convergence: Option<ConvergenceReport<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    convergence_note: Option<String>,
}

pub fn exit_code(termination: &Termination) -> u8 {
    match termination {
        Termination::StepTolerance | Termination::ResidualTolerance => EXIT_OK,
        Termination::MaxIterations => EXIT_NOT_CONVERGED,
        Termination::SingularMatrix { .. } | Termination::NonFinite { .. } | Termination::ModelError { .. } => {
            EXIT_SINGULAR
        }
    }
}

pub fn run(
    problem: &Problem,
    method: &MethodSpec<f64>,
    x0: &[f64],
    config: &SolverConfig<f64>,
    out: &Path,
) -> Result<u8> {
    let system = problem.system();
    let trace = iterate(system, method, x0, config)?;
    let out = OutDir::create(out)?;

    let mut w = out.writer("trace.csv")?;
    write_trace_csv(&trace, &mut w)?;
    w.flush()?;
    let mut w = out.writer("trace.json")?;
    write_trace_json(&trace, &mut w)?;
    writeln!(w)?;
    w.flush()?;

    let (convergence, convergence_note) = if trace.converged {
        match classify(system, method, trace.final_iterate(), config) {
            Ok(mut report) => {
                report.estimated_order = estimate_order(&trace).ok();
                (Some(report), None)
            }
            Err(e) => (None, Some(format!("not classified: {e}"))),
        }
    } else {
        (None, Some("run did not converge".to_string()))
    };
    let report = SolveReport {
        converged: trace.converged,
        termination: &trace.termination,
        iterations: trace.iterations(),
        final_x: trace.final_iterate(),
        final_residual: trace.final_residual(),
        convergence,
        convergence_note,
    };
    out.json("report.json", &report)?;

    let inputs = json!({ "system": problem.digest_value(), "x0": x0 });
    out.manifest(&RunManifest::new(&format!("solve {}", problem.name()), *config, Some(*method), &inputs))?;

    let x: Vec<String> = trace.final_iterate().iter().map(|&v| num(v)).collect();
    println!(
        "{:?} after {} iterations: x = [{}], residual = {:e}",
        trace.termination,
        trace.iterations(),
        x.join(", "),
        trace.final_residual()
    );
    Ok(exit_code(&trace.termination))
}
