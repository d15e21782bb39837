//! Flags shared by several subcommands and the problem loaders behind them.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use fracsolve::io::{read_receiver_input, ReceiverInput};
use fracsolve::receiver::ReceiverConstants;
use fracsolve::{MethodSpec, OrderRule, PowerTermSystem, ReceiverSystem, SolverConfig, System};
use serde::Serialize;

pub const DEFAULT_ALPHA: f64 = 0.89825;
pub const DEFAULT_DELTA: f64 = fracsolve::fracops::DEFAULT_DELTA;
pub const RECEIVER_X0: [f64; 2] = fracsolve::reference::X0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodKind {
    /// Fractional Newton-Raphson, order rule beta.
    Fnr,
    /// Fractional Newton-Raphson, order rule alpha_f.
    FnrAccelerated,
    /// Fractional quasi-Newton, order rule beta.
    QuasiNewton,
    /// Fractional quasi-Newton, order rule alpha_f.
    QuasiNewtonAccelerated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RuleKind {
    Constant,
    Beta,
    AlphaF,
}

#[derive(Debug, Clone, Args)]
pub struct MethodOpts {
    #[arg(long, value_enum, default_value = "quasi-newton-accelerated")]
    pub method: MethodKind,
    /// Nominal fractional order.
    #[arg(long, default_value_t = DEFAULT_ALPHA, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Residual threshold of the accelerated rule.
    #[arg(long, default_value_t = DEFAULT_DELTA)]
    pub delta: f64,
    /// Replace the order rule implied by --method.
    #[arg(long, value_enum)]
    pub rule: Option<RuleKind>,
    /// Scale of f(x_i) in the affine model (quasi-Newton only).
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub a: f64,
    /// Shift b·x_i in the affine model (quasi-Newton only).
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub b: f64,
}

impl MethodOpts {
    pub fn spec(&self) -> Result<MethodSpec<f64>> {
        if !self.alpha.is_finite() || !self.delta.is_finite() || !self.a.is_finite() || !self.b.is_finite() {
            bail!("--alpha, --delta, --a and --b must be finite");
        }
        let accelerated = matches!(self.method, MethodKind::FnrAccelerated | MethodKind::QuasiNewtonAccelerated);
        let rule = match self.rule {
            Some(RuleKind::Constant) => OrderRule::constant(self.alpha),
            Some(RuleKind::Beta) => OrderRule::beta(self.alpha),
            Some(RuleKind::AlphaF) => OrderRule::alpha_f(self.alpha, self.delta),
            None if accelerated => OrderRule::alpha_f(self.alpha, self.delta),
            None => OrderRule::beta(self.alpha),
        };
        match self.method {
            MethodKind::Fnr | MethodKind::FnrAccelerated => {
                if self.a != 1.0 || self.b != 0.0 {
                    bail!("--a and --b only apply to the quasi-Newton methods");
                }
                Ok(MethodSpec::fractional_newton_raphson(rule))
            }
            MethodKind::QuasiNewton | MethodKind::QuasiNewtonAccelerated => {
                Ok(MethodSpec::generalized(rule, self.a, self.b))
            }
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct ConfigOpts {
    /// JSON file overriding solver defaults; individual flags win over it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Stop when the step norm falls to this.
    #[arg(long)]
    pub step_tol: Option<f64>,
    /// Stop when the residual norm falls to this.
    #[arg(long)]
    pub residual_tol: Option<f64>,
    /// Iteration limit.
    #[arg(long)]
    pub max_iter: Option<usize>,
    /// Threshold on the iteration-function derivative norm for order classification.
    #[arg(long)]
    pub classification_tol: Option<f64>,
}

impl ConfigOpts {
    pub fn resolve(&self) -> Result<SolverConfig<f64>> {
        let mut config: SolverConfig<f64> = match &self.config {
            Some(path) => read_json(path)?,
            None => SolverConfig::default(),
        };
        if let Some(v) = self.step_tol {
            config.step_tol = v;
        }
        if let Some(v) = self.residual_tol {
            config.residual_tol = v;
        }
        if let Some(v) = self.max_iter {
            config.max_iter = v;
        }
        if let Some(v) = self.classification_tol {
            config.classification_tol = v;
        }
        config.validate()?;
        Ok(config)
    }
}

#[derive(Debug, Clone, Args)]
pub struct ReceiverOpts {
    /// Direct normal irradiance.
    #[arg(long)]
    pub dni: Option<f64>,
    /// Ambient temperature.
    #[arg(long, allow_negative_numbers = true)]
    pub tair: Option<f64>,
    /// JSON file with DNI, T_air and optional constant overrides.
    #[arg(long)]
    pub params: Option<PathBuf>,
}

impl ReceiverOpts {
    pub fn input(&self) -> Result<ReceiverInput<f64>> {
        let mut input = match &self.params {
            Some(path) => {
                let file = fs::File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
                read_receiver_input(file).with_context(|| format!("invalid parameter file {}", path.display()))?
            }
            None => match (self.dni, self.tair) {
                (Some(dni), Some(t_air)) => ReceiverInput { dni, t_air, constants: ReceiverConstants::default() },
                _ => bail!("the receiver problem needs --dni and --tair, or --params"),
            },
        };
        if let Some(dni) = self.dni {
            input.dni = dni;
        }
        if let Some(t) = self.tair {
            input.t_air = t;
        }
        input.params()?;
        Ok(input)
    }
}

/// A loaded problem together with what goes into the input digest.
#[allow(clippy::large_enum_variant)]
pub enum Problem {
    Receiver(ReceiverInput<f64>, ReceiverSystem<f64>),
    Poly(PowerTermSystem<f64>),
}

#[derive(Serialize)]
#[serde(tag = "problem", rename_all = "snake_case")]
enum ProblemDigest<'a> {
    Receiver { input: &'a ReceiverInput<f64> },
    Poly { system: &'a PowerTermSystem<f64> },
}

impl Problem {
    pub fn receiver(opts: &ReceiverOpts) -> Result<Problem> {
        let input = opts.input()?;
        let system = ReceiverSystem::new(input.params()?);
        Ok(Problem::Receiver(input, system))
    }

    pub fn poly(path: &Path) -> Result<Problem> {
        Ok(Problem::Poly(read_json(path)?))
    }

    pub fn system(&self) -> &(dyn System<f64> + Sync) {
        match self {
            Problem::Receiver(_, s) => s,
            Problem::Poly(s) => s,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Problem::Receiver(..) => "receiver",
            Problem::Poly(_) => "poly",
        }
    }

    pub fn digest_value(&self) -> serde_json::Value {
        let d = match self {
            Problem::Receiver(input, _) => ProblemDigest::Receiver { input },
            Problem::Poly(system) => ProblemDigest::Poly { system },
        };
        serde_json::to_value(d).expect("problem descriptions serialize")
    }

    pub fn x0(&self, given: Option<&[f64]>) -> Result<Vec<f64>> {
        let x0 = match (given, self) {
            (Some(x), _) => x.to_vec(),
            (None, Problem::Receiver(..)) => RECEIVER_X0.to_vec(),
            (None, Problem::Poly(_)) => bail!("--x0 is required for polynomial systems"),
        };
        let n = self.system().dim();
        if x0.len() != n {
            bail!("--x0 has {} components, the system has {n}", x0.len());
        }
        Ok(x0)
    }
}

/// Parses `1,2,3` into a vector.
pub fn parse_vector(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| format!("`{}`: {e}", t.trim())))
        .collect::<Result<Vec<_>, _>>()
        .and_then(|v| if v.iter().all(|x| x.is_finite()) { Ok(v) } else { Err("values must be finite".into()) })
}

/// Parses `lo,hi`.
pub fn parse_range(s: &str) -> Result<(f64, f64), String> {
    match parse_vector(s)?.as_slice() {
        [lo, hi] if lo <= hi => Ok((*lo, *hi)),
        [_, _] => Err("range must satisfy lo <= hi".into()),
        _ => Err("expected `lo,hi`".into()),
    }
}

/// Parses either `start:step:stop` (inclusive) or a comma-separated list.
pub fn parse_grid(s: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [_] => parse_vector(s),
        [start, step, stop] => {
            let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("`{}`: {e}", t.trim()));
            let (start, step, stop) = (num(start)?, num(step)?, num(stop)?);
            if !step.is_finite() || step <= 0.0 || !start.is_finite() || !stop.is_finite() || stop < start {
                return Err("grid needs start <= stop and a positive step".into());
            }
            let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
            if count > 1_000_000 {
                return Err("grid has too many points".into());
            }
            // Round away the accumulated binary noise so 0.1 + 18 * 0.05 prints as 1.
            Ok((0..count).map(|k| ((start + step * k as f64) * 1e12).round() / 1e12).collect())
        }
        _ => Err("expected `start:step:stop` or a comma-separated list".into()),
    }
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let bytes = fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_slice(&bytes).map_err(|e| match e.line() {
        0 => anyhow::anyhow!("{}: {e}", path.display()),
        line => anyhow::anyhow!("{}:{line}:{}: {e}", path.display(), e.column()),
    })
}
