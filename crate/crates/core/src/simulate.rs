//! Batch efficiency simulation over random operating points.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::receiver::{build_params, recover, ReceiverConstants, ReceiverState, ReceiverSystem};
use crate::scalar::Scalar;
use crate::solver::{iterate, MethodSpec, SolverConfig};

/// Domain used by default for the random operating points.
pub const DEFAULT_DNI_RANGE: (f64, f64) = (12.0, 958.0);
pub const DEFAULT_TAIR_RANGE: (f64, f64) = (11.0, 45.0);

/// Draws `n` `(DNI, T_air)` pairs uniformly from the rectangle. The same
/// seed always yields the same sequence.
pub fn sample_uniform(n: usize, dni: (f64, f64), t_air: (f64, f64), seed: u64) -> Vec<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| (rng.random_range(dni.0..=dni.1), rng.random_range(t_air.0..=t_air.1))).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct SimulationRecord<T> {
    pub dni: T,
    pub t_air: T,
    pub state: Option<ReceiverState<T>>,
    pub iterations: usize,
    pub converged: bool,
    pub error: Option<String>,
}

/// Solves the reduced receiver system at every operating point and
/// recovers the full state. Output order follows `samples`.
pub fn run<T: Scalar>(
    samples: &[(T, T)],
    method: &MethodSpec<T>,
    x0: &[T; 2],
    config: &SolverConfig<T>,
    constants: &ReceiverConstants<T>,
) -> Vec<SimulationRecord<T>> {
    samples.par_iter().map(|&(dni, t_air)| solve_point(dni, t_air, method, x0, config, constants)).collect()
}

fn solve_point<T: Scalar>(
    dni: T,
    t_air: T,
    method: &MethodSpec<T>,
    x0: &[T; 2],
    config: &SolverConfig<T>,
    constants: &ReceiverConstants<T>,
) -> SimulationRecord<T> {
    let mut rec = SimulationRecord { dni, t_air, state: None, iterations: 0, converged: false, error: None };
    let params = match build_params(dni, t_air, constants) {
        Ok(p) => p,
        Err(e) => {
            rec.error = Some(e.to_string());
            return rec;
        }
    };
    match iterate(&ReceiverSystem::new(params), method, x0, config) {
        Ok(trace) => {
            rec.iterations = trace.iterations();
            rec.converged = trace.converged;
            if !trace.converged {
                rec.error = Some(format!("{:?}", trace.termination));
            }
            match recover(trace.final_iterate(), &params) {
                Ok(s) => rec.state = Some(s),
                Err(e) => rec.error = Some(e.to_string()),
            }
        }
        Err(e) => rec.error = Some(e.to_string()),
    }
    rec
}

/// Mean and sample standard deviation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Stats {
    pub mean: f64,
    pub std: f64,
    pub min: f64,
    pub max: f64,
}

impl Stats {
    pub fn of(values: &[f64]) -> Option<Stats> {
        if values.is_empty() {
            return None;
        }
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let var = if values.len() > 1 {
            values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0)
        } else {
            0.0
        };
        let min = values.iter().copied().fold(f64::INFINITY, f64::min);
        let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Some(Stats { mean, std: var.sqrt(), min, max })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub samples: usize,
    pub converged: usize,
    pub convergence_rate: f64,
    pub dni: Option<Stats>,
    pub t_air: Option<Stats>,
    /// Efficiencies over converged samples only.
    pub eta_cell: Option<Stats>,
    pub eta_teg: Option<Stats>,
}

pub fn summarize<T: Scalar>(records: &[SimulationRecord<T>]) -> Summary {
    let dni: Vec<f64> = records.iter().map(|r| r.dni.as_f64()).collect();
    let t_air: Vec<f64> = records.iter().map(|r| r.t_air.as_f64()).collect();
    let states: Vec<&ReceiverState<T>> =
        records.iter().filter(|r| r.converged).filter_map(|r| r.state.as_ref()).collect();
    let eta_cell: Vec<f64> = states.iter().map(|s| s.eta_cell.as_f64()).collect();
    let eta_teg: Vec<f64> = states.iter().map(|s| s.eta_teg.as_f64()).collect();
    let converged = records.iter().filter(|r| r.converged).count();
    Summary {
        samples: records.len(),
        converged,
        convergence_rate: if records.is_empty() { 0.0 } else { converged as f64 / records.len() as f64 },
        dni: Stats::of(&dni),
        t_air: Stats::of(&t_air),
        eta_cell: Stats::of(&eta_cell),
        eta_teg: Stats::of(&eta_teg),
    }
}

/// Equal-width histogram over `[min, max]` of the data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub counts: Vec<usize>,
}

pub fn histogram(values: &[f64], bins: usize) -> Histogram {
    let bins = bins.max(1);
    let finite: Vec<f64> = values.iter().copied().filter(|v| v.is_finite()).collect();
    if finite.is_empty() {
        return Histogram { edges: Vec::new(), counts: Vec::new() };
    }
    let lo = finite.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = finite.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let width = if hi > lo { (hi - lo) / bins as f64 } else { 1.0 };
    let edges = (0..=bins).map(|k| lo + width * k as f64).collect();
    let mut counts = vec![0; bins];
    for v in finite {
        let k = (((v - lo) / width) as usize).min(bins - 1);
        counts[k] += 1;
    }
    Histogram { edges, counts }
}
