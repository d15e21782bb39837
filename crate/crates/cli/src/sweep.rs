use std::io::Write;
use std::path::Path;

use anyhow::{bail, Result};
use fracsolve::solver::root_cluster_tol;
use fracsolve::{alpha_sweep, MethodSpec, SolverConfig, Termination};
use serde::Serialize;
use serde_json::json;

use crate::options::Problem;
use crate::output::{cell, num, OutDir, RunManifest};
use crate::EXIT_OK;

#[derive(Serialize)]
struct RootsOut<'a> {
    tolerance: f64,
    roots: &'a [Vec<f64>],
}

fn termination_label(t: &Termination) -> &'static str {
    match t {
        Termination::StepTolerance => "step_tolerance",
        Termination::ResidualTolerance => "residual_tolerance",
        Termination::MaxIterations => "max_iterations",
        Termination::SingularMatrix { .. } => "singular_matrix",
        Termination::NonFinite { .. } => "non_finite",
        Termination::ModelError { .. } => "model_error",
    }
}

pub fn run(
    problem: &Problem,
    method: &MethodSpec<f64>,
    x0: &[f64],
    alphas: &[f64],
    config: &SolverConfig<f64>,
    out: &Path,
) -> Result<u8> {
    if alphas.is_empty() {
        bail!("the alpha grid is empty");
    }
    let result = alpha_sweep(problem.system(), method, x0, alphas, config);
    let out = OutDir::create(out)?;
    let n = x0.len();

    let mut w = out.writer("sweep.csv")?;
    let xs: Vec<String> = (1..=n).map(|k| format!("x_{k}")).collect();
    writeln!(w, "alpha,converged,iterations,termination,{},residual_norm,error", xs.join(","))?;
    for run in &result.runs {
        let trace = run.trace.as_ref();
        let x: Vec<String> = match trace {
            Some(t) => t.final_iterate().iter().map(|&v| num(v)).collect(),
            None => vec![String::new(); n],
        };
        let error = run.error.as_deref().unwrap_or("").replace([',', '\n'], " ");
        writeln!(
            w,
            "{},{},{},{},{},{},{}",
            num(run.alpha),
            run.converged(),
            trace.map(|t| t.iterations().to_string()).unwrap_or_default(),
            trace.map(|t| termination_label(&t.termination)).unwrap_or("error"),
            x.join(","),
            cell(trace.map(|t| t.final_residual())),
            error
        )?;
    }
    w.flush()?;
    out.json("roots.json", &RootsOut { tolerance: root_cluster_tol(config), roots: &result.roots })?;

    let inputs = json!({ "system": problem.digest_value(), "x0": x0, "alphas": alphas });
    out.manifest(&RunManifest::new(&format!("sweep {}", problem.name()), *config, Some(*method), &inputs))?;

    let converged = result.runs.iter().filter(|r| r.converged()).count();
    println!("{converged}/{} orders converged, {} distinct roots", result.runs.len(), result.roots.len());
    for r in &result.roots {
        let x: Vec<String> = r.iter().map(|&v| num(v)).collect();
        println!("  [{}]", x.join(", "));
    }
    Ok(EXIT_OK)
}
