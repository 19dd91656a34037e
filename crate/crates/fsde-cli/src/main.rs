//! `fsde`: solve stochastic differential equations whose coefficients are
//! triangular fuzzy numbers, and export the runs as CSV or JSON.
//!
//! Every command writes its data to `--out` and prints a one-line summary
//! to stdout; warnings and errors go to stderr. Identical invocations
//! produce byte-identical output files.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod config;

#[derive(Parser)]
#[command(
    name = "fsde",
    version,
    about = "Euler-Maruyama solver for SDEs with triangular fuzzy parameters"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a seeded Brownian path on a uniform grid
    Paths(PathsArgs),
    /// Solve a crisp model with Euler-Maruyama
    Solve(SolveArgs),
    /// Solve the lower/upper corner models of a fuzzy parameter set
    FuzzySolve(FuzzySolveArgs),
    /// Pointwise min/max envelope over all fuzzy parameter corners
    Envelope(EnvelopeArgs),
    /// Mean endpoint error against the closed form, per step size
    Converge(ConvergeArgs),
    /// Terminal solution bounds across a grid of membership levels
    AlphaSweep(AlphaSweepArgs),
}

#[derive(Clone, Copy, ValueEnum)]
pub enum KindArg {
    Gbm,
    Langevin,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Args)]
pub struct GridOpts {
    /// Grid start time
    #[arg(long = "t0", default_value_t = 0.0, allow_hyphen_values = true)]
    pub t0: f64,
    /// Grid end time
    #[arg(long = "T", default_value_t = 1.0)]
    pub t_end: f64,
    /// Fine step size as a decimal
    #[arg(long, conflicts_with = "dt_exp")]
    pub dt: Option<f64>,
    /// Fine step size as a power-of-two exponent (-8 means 2^-8, the default)
    #[arg(long = "dt-exp", allow_hyphen_values = true)]
    pub dt_exp: Option<i32>,
}

impl GridOpts {
    pub fn dt(&self) -> f64 {
        match (self.dt, self.dt_exp) {
            (Some(dt), _) => dt,
            (None, Some(e)) => 2f64.powi(e),
            (None, None) => 2f64.powi(-8),
        }
    }
}

#[derive(Args)]
pub struct ModelOpts {
    /// Model kind
    #[arg(long, value_enum)]
    pub model: Option<KindArg>,
    /// Drift coefficient: a number or a fuzzy triple l,peak,r
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    /// Diffusion coefficient: a number or a fuzzy triple l,peak,r
    #[arg(long, allow_hyphen_values = true)]
    pub sigma: Option<String>,
    /// Initial state: a number or a fuzzy triple l,peak,r (default 1)
    #[arg(long, allow_hyphen_values = true)]
    pub x0: Option<String>,
    /// Plain-text config with `key = value` lines; flags take precedence
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Args)]
pub struct OutputOpts {
    /// Output data file
    #[arg(long)]
    pub out: PathBuf,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Args)]
pub struct PathsArgs {
    #[command(flatten)]
    pub grid: GridOpts,
    /// Path seed
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputOpts,
}

#[derive(Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub model: ModelOpts,
    #[command(flatten)]
    pub grid: GridOpts,
    /// Coarsening factor applied to the fine grid
    #[arg(long = "R", default_value_t = 1)]
    pub coarsen: usize,
    /// Path seed
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputOpts,
    /// Also write the closed-form solution on the fine grid (gbm only)
    #[arg(long = "exact-out")]
    pub exact_out: Option<PathBuf>,
}

#[derive(Args)]
pub struct FuzzyCommon {
    #[command(flatten)]
    pub model: ModelOpts,
    #[command(flatten)]
    pub grid: GridOpts,
    /// Coarsening factor applied to the fine grid
    #[arg(long = "R", default_value_t = 1)]
    pub coarsen: usize,
    /// Membership level to cut the fuzzy coefficients at
    #[arg(long, default_value_t = 0.0)]
    pub alpha: f64,
    /// Path seed
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputOpts,
}

#[derive(Args)]
pub struct FuzzySolveArgs {
    #[command(flatten)]
    pub common: FuzzyCommon,
    /// Also write the closed-form corner solutions on the fine grid (gbm only)
    #[arg(long = "exact-out")]
    pub exact_out: Option<PathBuf>,
}

#[derive(Args)]
pub struct EnvelopeArgs {
    #[command(flatten)]
    pub common: FuzzyCommon,
}

#[derive(Args)]
pub struct ConvergeArgs {
    #[command(flatten)]
    pub model: ModelOpts,
    #[command(flatten)]
    pub grid: GridOpts,
    /// Coarsening factors to compare, comma separated
    #[arg(long = "R", value_delimiter = ',', default_values_t = [8, 4, 2])]
    pub coarsen: Vec<usize>,
    /// Master seed; ensemble member k uses a seed derived from it
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Ensemble size (1 reproduces a single-realisation experiment)
    #[arg(long, default_value_t = 1)]
    pub seeds: usize,
    #[command(flatten)]
    pub output: OutputOpts,
}

#[derive(Args)]
pub struct AlphaSweepArgs {
    #[command(flatten)]
    pub model: ModelOpts,
    #[command(flatten)]
    pub grid: GridOpts,
    /// Coarsening factor applied to the fine grid
    #[arg(long = "R", default_value_t = 1)]
    pub coarsen: usize,
    /// Membership levels, comma separated (default 0, 0.1, ..., 1)
    #[arg(long, value_delimiter = ',')]
    pub alphas: Option<Vec<f64>>,
    /// Path seed
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputOpts,
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Paths(args) => commands::paths(&args),
        Command::Solve(args) => commands::solve(&args),
        Command::FuzzySolve(args) => commands::fuzzy_solve(&args),
        Command::Envelope(args) => commands::envelope(&args),
        Command::Converge(args) => commands::converge(&args),
        Command::AlphaSweep(args) => commands::alpha_sweep(&args),
    };
    if let Err(e) = result {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}
