//! `fracsolve` command-line tool.
//!
//! Exit status: 0 success, 1 usage/I/O/parse error, 2 not converged,
//! 3 singular or non-finite iteration, 4 reference tables not reproduced.

mod options;
mod output;
mod simulate;
mod solve;
mod sweep;
mod tables;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use options::{parse_grid, parse_range, parse_vector, ConfigOpts, MethodOpts, Problem, ReceiverOpts};
use simulate::{Distribution, SimulateJob};

pub const EXIT_OK: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_NOT_CONVERGED: u8 = 2;
pub const EXIT_SINGULAR: u8 = 3;
pub const EXIT_MISMATCH: u8 = 4;

const THREADS_ENV: &str = "FRACSOLVE_THREADS";

#[derive(Parser)]
#[command(name = "fracsolve", version, about = "Fractional fixed-point root finders")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one system and write its trace.
    Solve {
        #[command(subcommand)]
        problem: ProblemCmd,
    },
    /// Rerun the six reference cases and compare with the embedded tables.
    ReproduceTables {
        #[command(flatten)]
        config: ConfigOpts,
        /// Use this order for every case instead of the tabulated one.
        #[arg(long)]
        alpha: Option<f64>,
        /// Also write tables.json and a manifest here.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Solve the receiver at many random operating points.
    Simulate(SimulateArgs),
    /// Solve one system for every order in a grid.
    Sweep {
        #[command(subcommand)]
        problem: SweepCmd,
    },
}

#[derive(Subcommand)]
enum ProblemCmd {
    /// The reduced hybrid receiver model.
    Receiver {
        #[command(flatten)]
        receiver: ReceiverOpts,
        #[command(flatten)]
        run: RunOpts,
    },
    /// A power-term system read from JSON.
    Poly {
        /// JSON power-term system.
        file: PathBuf,
        #[command(flatten)]
        run: RunOpts,
    },
}

#[derive(Args)]
struct RunOpts {
    #[command(flatten)]
    method: MethodOpts,
    #[command(flatten)]
    config: ConfigOpts,
    /// Starting point, comma separated. Defaults to 3000,3000 for the receiver.
    #[arg(long, value_parser = parse_vector, allow_hyphen_values = true)]
    x0: Option<::std::vec::Vec<f64>>,
    /// Directory for the output files.
    #[arg(long, default_value = "fracsolve-out")]
    out_dir: PathBuf,
}

#[derive(Subcommand)]
enum SweepCmd {
    Receiver {
        #[command(flatten)]
        receiver: ReceiverOpts,
        #[command(flatten)]
        grid: GridOpts,
        #[command(flatten)]
        run: RunOpts,
    },
    Poly {
        /// JSON power-term system.
        file: PathBuf,
        #[command(flatten)]
        grid: GridOpts,
        #[command(flatten)]
        run: RunOpts,
    },
}

#[derive(Args)]
struct GridOpts {
    /// `start:step:stop` or a comma-separated list.
    #[arg(long, value_parser = parse_grid)]
    alphas: ::std::vec::Vec<f64>,
    /// Drop integer orders from the grid.
    #[arg(long)]
    skip_integers: bool,
}

impl GridOpts {
    fn values(&self) -> Vec<f64> {
        self.alphas.iter().copied().filter(|a| !self.skip_integers || a.fract() != 0.0).collect()
    }
}

#[derive(Args)]
struct SimulateArgs {
    /// Number of uniform samples.
    #[arg(long, default_value_t = 2410)]
    n: usize,
    /// DNI bounds `lo,hi` for uniform sampling.
    #[arg(long, value_parser = parse_range, default_value = "12,958")]
    dni_range: (f64, f64),
    /// Ambient temperature bounds `lo,hi` for uniform sampling.
    #[arg(long, value_parser = parse_range, default_value = "11,45")]
    tair_range: (f64, f64),
    /// Seed of the uniform sampler.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Where operating points come from.
    #[arg(long, value_enum, default_value = "uniform")]
    distribution: Distribution,
    /// CSV with DNI,T_air columns, for --distribution file.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Histogram bins for eta_cell.
    #[arg(long, default_value_t = 20)]
    bins: usize,
    #[command(flatten)]
    method: MethodOpts,
    #[command(flatten)]
    config: ConfigOpts,
    /// Directory for the output files.
    #[arg(long, default_value = "fracsolve-out")]
    out_dir: PathBuf,
}

fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v.trim().parse().with_context(|| format!("{THREADS_ENV}={v} is not a thread count"))?;
        if n > 0 {
            rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
        }
    }
    Ok(())
}

fn dispatch(cli: Cli) -> Result<u8> {
    configure_threads()?;
    match cli.command {
        Command::Solve { problem } => {
            let (problem, run) = match problem {
                ProblemCmd::Receiver { receiver, run } => (Problem::receiver(&receiver)?, run),
                ProblemCmd::Poly { file, run } => (Problem::poly(&file)?, run),
            };
            let x0 = problem.x0(run.x0.as_deref())?;
            solve::run(&problem, &run.method.spec()?, &x0, &run.config.resolve()?, &run.out_dir)
        }
        Command::ReproduceTables { config, alpha, out_dir } => {
            tables::run(&config.resolve()?, alpha, out_dir.as_deref())
        }
        Command::Simulate(args) => simulate::run(&SimulateJob {
            n: args.n,
            dni_range: args.dni_range,
            tair_range: args.tair_range,
            seed: args.seed,
            distribution: args.distribution,
            input: args.input,
            bins: args.bins,
            method: args.method.spec()?,
            config: args.config.resolve()?,
            out: args.out_dir,
        }),
        Command::Sweep { problem } => {
            let (problem, grid, run) = match problem {
                SweepCmd::Receiver { receiver, grid, run } => (Problem::receiver(&receiver)?, grid, run),
                SweepCmd::Poly { file, grid, run } => (Problem::poly(&file)?, grid, run),
            };
            let x0 = problem.x0(run.x0.as_deref())?;
            sweep::run(&problem, &run.method.spec()?, &x0, &grid.values(), &run.config.resolve()?, &run.out_dir)
        }
    }
}

fn main() -> ExitCode {
    // clap's own failure status (2) would collide with "not converged".
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_ERROR) } else { ExitCode::SUCCESS };
        }
    };
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
