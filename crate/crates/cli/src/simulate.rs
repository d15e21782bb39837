use std::fs;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use fracsolve::io::read_batch_csv;
use fracsolve::receiver::ReceiverConstants;
use fracsolve::simulate::{self, histogram, sample_uniform, summarize};
use fracsolve::{MethodSpec, SolverConfig};
use serde::Serialize;
use serde_json::json;

use crate::options::RECEIVER_X0;
use crate::output::{cell, num, OutDir, RunManifest};
use crate::{EXIT_NOT_CONVERGED, EXIT_OK};

/// Share of samples that must converge for a zero exit status.
pub const MIN_CONVERGED: f64 = 0.99;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Distribution {
    Uniform,
    File,
}

pub struct SimulateJob {
    pub n: usize,
    pub dni_range: (f64, f64),
    pub tair_range: (f64, f64),
    pub seed: u64,
    pub distribution: Distribution,
    pub input: Option<PathBuf>,
    pub bins: usize,
    pub method: MethodSpec<f64>,
    pub config: SolverConfig<f64>,
    pub out: PathBuf,
}

#[derive(Serialize)]
struct HistogramOut<'a> {
    variable: &'static str,
    edges: &'a [f64],
    counts: &'a [usize],
}

pub fn run(job: &SimulateJob) -> Result<u8> {
    let (samples, inputs, seed) = match job.distribution {
        Distribution::Uniform => {
            if job.n == 0 {
                bail!("--n must be at least 1");
            }
            let samples = sample_uniform(job.n, job.dni_range, job.tair_range, job.seed);
            let inputs = json!({
                "distribution": "uniform",
                "n": job.n,
                "dni_range": [job.dni_range.0, job.dni_range.1],
                "tair_range": [job.tair_range.0, job.tair_range.1],
            });
            (samples, inputs, Some(job.seed))
        }
        Distribution::File => {
            let Some(path) = &job.input else { bail!("--distribution file needs --input") };
            let file = fs::File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
            let samples = read_batch_csv(file).with_context(|| format!("invalid batch file {}", path.display()))?;
            if samples.is_empty() {
                bail!("{} has no samples", path.display());
            }
            let inputs = json!({ "distribution": "file", "samples": samples });
            (samples, inputs, None)
        }
    };

    let records = simulate::run(&samples, &job.method, &RECEIVER_X0, &job.config, &ReceiverConstants::default());
    let out = OutDir::create(&job.out)?;

    let mut w = out.writer("samples.csv")?;
    writeln!(w, "DNI,T_air,T_cell,T_hot,T_cold,eta_cell,eta_TEG,iterations,converged")?;
    for r in &records {
        let s = r.state.as_ref();
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{}",
            num(r.dni),
            num(r.t_air),
            cell(s.map(|s| s.t_cell)),
            cell(s.map(|s| s.t_hot)),
            cell(s.map(|s| s.t_cold)),
            cell(s.map(|s| s.eta_cell)),
            cell(s.map(|s| s.eta_teg)),
            r.iterations,
            r.converged
        )?;
    }
    w.flush()?;

    let eta: Vec<f64> = records.iter().filter(|r| r.converged).filter_map(|r| r.state.map(|s| s.eta_cell)).collect();
    let hist = histogram(&eta, job.bins);
    out.json("histogram.json", &HistogramOut { variable: "eta_cell", edges: &hist.edges, counts: &hist.counts })?;
    let summary = summarize(&records);
    out.json("summary.json", &summary)?;

    let mut manifest = RunManifest::new("simulate", job.config, Some(job.method), &inputs);
    manifest.seed = seed;
    out.manifest(&manifest)?;

    println!("{}/{} samples converged ({:.2}%)", summary.converged, summary.samples, 100.0 * summary.convergence_rate);
    for (name, stats) in
        [("DNI", summary.dni), ("T_air", summary.t_air), ("eta_cell", summary.eta_cell), ("eta_TEG", summary.eta_teg)]
    {
        if let Some(s) = stats {
            println!("{name:<9} mean {:<12.6} std {:<12.6} min {:<12.6} max {:.6}", s.mean, s.std, s.min, s.max);
        }
    }
    for r in records.iter().filter(|r| !r.converged).take(10) {
        eprintln!("not converged: DNI={} T_air={}: {}", r.dni, r.t_air, r.error.as_deref().unwrap_or("unknown"));
    }
    Ok(if summary.convergence_rate >= MIN_CONVERGED { EXIT_OK } else { EXIT_NOT_CONVERGED })
}
