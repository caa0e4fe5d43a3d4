//! `wpbench`: construct multi-objective test problems with controllable
//! weak Pareto boundaries, measure the enclosed volume behind
//! dominance-resistant reference points, and run desk-scale evolutionary
//! experiments against those boundaries.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::Failure;

#[derive(Parser)]
#[command(name = "wpbench", version, about)]
struct Cli {
    /// Worker threads for sweeps and repeated runs
    /// (default: WPBENCH_WORKERS or all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample the Pareto front and every weak Pareto boundary of an instance.
    Generate(GenerateArgs),
    /// Enclosed-volume sweeps over boundary distance or boundary position.
    Volume(VolumeArgs),
    /// Lasso polynomial fit of a two-column curve CSV.
    Fit(FitArgs),
    /// Seeded evolutionary runs with boundary-proximity reporting.
    Evolve(EvolveArgs),
    /// Quality indicators for a population CSV.
    Metrics(MetricsArgs),
}

#[derive(Args)]
pub struct GenerateArgs {
    /// Catalog instance name (EMOP1..16, MOPW1..16).
    #[arg(long)]
    instance: Option<String>,
    /// Instance config file (key=value format) instead of a catalog name.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Objective count for scalable catalog instances.
    #[arg(long, default_value_t = 3)]
    m: usize,
    /// Boundary sample points per dimension.
    #[arg(long, default_value_t = 50)]
    resolution: usize,
    /// Minimum Pareto-front sample size.
    #[arg(long, default_value_t = 1000)]
    pf_points: usize,
    /// Output directory.
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Args)]
pub struct VolumeArgs {
    /// Objective count of the case-study front.
    #[arg(long, default_value_t = 3)]
    m: usize,
    /// Shape exponent of the front family.
    #[arg(long, default_value_t = 1.0)]
    p: f64,
    /// Boundary category (number of constrained coordinates).
    #[arg(long, default_value_t = 2)]
    nu: usize,
    /// Constrained coordinates as 1-based indices, e.g. "1,2".
    /// Defaults to the first nu coordinates.
    #[arg(long)]
    index_set: Option<String>,
    /// Value of the unconstrained reference coordinates.
    #[arg(long, default_value_t = 1.3)]
    rfree: f64,
    /// Normalized flange extent past the nadir.
    #[arg(long, default_value_t = 0.5)]
    flange: f64,
    /// Distances, either "start:step:end" or a comma list.
    #[arg(long, default_value = "0.02:0.02:0.6")]
    deltas: String,
    /// Comma list of methods: exact, mc, scalarized.
    #[arg(long, default_value = "exact")]
    method: String,
    /// Monte Carlo samples per point.
    #[arg(long, default_value_t = 1_000_000)]
    samples: u64,
    /// Scalarization directions per point.
    #[arg(long, default_value_t = 20_000)]
    directions: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Sweep boundary position at fixed distance instead of distance.
    #[arg(long, default_value_t = false)]
    midline: bool,
    /// Normal distance for midline sweeps.
    #[arg(long, default_value_t = 0.1)]
    delta: f64,
    /// Midline positions (0 = middle, 1 = boundary edge).
    #[arg(long, default_value = "0:0.1:1")]
    positions: String,
    /// Append a Lasso fit with this degree cap.
    #[arg(long)]
    fit: Option<usize>,
    /// Append the estimated asymptotic growth order.
    #[arg(long, default_value_t = false)]
    growth: bool,
    /// Report where this curve crosses the matching nu=1 curve.
    #[arg(long, default_value_t = false)]
    crossing_with_nu1: bool,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
pub struct FitArgs {
    /// CSV whose first two numeric columns are (distance, volume).
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = 6)]
    degree_cap: usize,
    /// Fixed regularization weight; cross-validated when omitted.
    #[arg(long)]
    lambda: Option<f64>,
    /// Activity tolerance for the reported lowest active degree.
    #[arg(long, default_value_t = 1e-4)]
    tol: f64,
    /// Label echoed into the output rows.
    #[arg(long)]
    tag: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
pub struct EvolveArgs {
    #[arg(long)]
    instance: Option<String>,
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, default_value_t = 3)]
    m: usize,
    /// Selection scheme: pareto_crowding, cone_crowding, decomposition.
    #[arg(long, default_value = "pareto_crowding")]
    select: String,
    /// Cone mixing coefficient (cone_crowding).
    #[arg(long)]
    delta: Option<f64>,
    /// Augmentation weight (decomposition).
    #[arg(long)]
    rho: Option<f64>,
    /// Neighborhood size (decomposition).
    #[arg(long)]
    neighborhood: Option<usize>,
    /// Independent seeded repetitions.
    #[arg(long, default_value_t = 1)]
    runs: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Population size (default: study defaults per m).
    #[arg(long)]
    pop: Option<usize>,
    /// Evaluation budget (default: study defaults per m).
    #[arg(long)]
    budget: Option<u64>,
    /// Proximity threshold for counting dominance-resistant solutions.
    #[arg(long, default_value_t = 0.05)]
    threshold: f64,
    /// Boundary sample resolution for distance queries.
    #[arg(long, default_value_t = 200)]
    resolution: usize,
    /// Report IGD against a dense Pareto-front sample.
    #[arg(long, default_value_t = false)]
    igd: bool,
    /// Report IGD against the algorithm's ideal-distribution baseline.
    #[arg(long, default_value_t = false)]
    igd_down: bool,
    /// Build the ideal baseline from position-only runs.
    #[arg(long, default_value_t = false)]
    build_baseline: bool,
    /// Load the ideal baseline from a CSV instead of building it.
    #[arg(long)]
    baseline: Option<PathBuf>,
    /// Position-only runs used to build the baseline.
    #[arg(long, default_value_t = 30)]
    baseline_runs: usize,
    /// Accumulate a position histogram along the first category-2 boundary.
    #[arg(long, default_value_t = false)]
    histogram: bool,
    /// Histogram bins.
    #[arg(long, default_value_t = 9)]
    bins: usize,
    /// Output directory.
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Args)]
pub struct MetricsArgs {
    /// Population CSV (one objective vector per row).
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    instance: Option<String>,
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, default_value_t = 3)]
    m: usize,
    /// Hypervolume reference point, comma-separated.
    #[arg(long)]
    reference: Option<String>,
    /// IGD against a dense Pareto-front sample.
    #[arg(long, default_value_t = false)]
    igd_pf: bool,
    /// IGD against a baseline CSV.
    #[arg(long)]
    baseline: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    let workers = cli.workers.or_else(|| {
        std::env::var("WPBENCH_WORKERS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(n) = workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("wpbench: could not configure {n} workers: {e}");
            return ExitCode::from(1);
        }
    }

    let result = match &cli.command {
        Command::Generate(args) => commands::cmd_generate(args),
        Command::Volume(args) => commands::cmd_volume(args),
        Command::Fit(args) => commands::cmd_fit(args),
        Command::Evolve(args) => commands::cmd_evolve(args),
        Command::Metrics(args) => commands::cmd_metrics(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("wpbench: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("wpbench: {msg}");
            ExitCode::from(1)
        }
    }
}
