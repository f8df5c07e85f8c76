//! `walkcent` command-line front end.

mod commands;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use walkcent::Error;

#[derive(Parser)]
#[command(name = "walkcent", version, about = "Walk-based network centrality measures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one centrality measure and print per-node scores.
    Compute(ComputeArgs),
    /// Sweep a parameterized measure over a grid and compare its rankings
    /// with degree and eigenvector centrality.
    Sweep(SweepArgs),
    /// Intersection distance between the rankings in two score files.
    Compare(CompareArgs),
    /// Reproduce the six-node PageRank example.
    PagerankDemo,
    /// Write a synthetic graph as an edge list.
    Generate(GenerateArgs),
}

#[derive(Args, Clone)]
pub struct GraphArgs {
    /// Graph file.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    pub format: Format,
    /// Read the edge list as directed (MatrixMarket files carry their own
    /// symmetry flag).
    #[arg(long)]
    pub directed: bool,
    /// Smallest node id in the edge list.
    #[arg(long, default_value_t = 1)]
    pub index_base: u64,
    /// Accept self-loops.
    #[arg(long)]
    pub allow_loops: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edgelist,
    Mtx,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Broadcast,
    Receive,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum MeasureArg {
    Degree,
    Eigenvector,
    Katz,
    ResolventSubgraph,
    ExpSubgraph,
    TotalCommunicability,
    HitsHub,
    HitsAuthority,
    Pagerank,
    HeatKernel,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    ExpSubgraph,
    TotalCommunicability,
    ResolventSubgraph,
    Katz,
    Pagerank,
}

#[derive(Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long, value_enum)]
    pub measure: MeasureArg,
    #[arg(long, value_enum, default_value_t = SideArg::Broadcast)]
    pub side: SideArg,
    /// Resolvent parameter (Katz, resolvent subgraph; default 0.85/λ₁) or
    /// PageRank damping factor (default 0.85).
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Exponential parameter (default 1).
    #[arg(long)]
    pub beta: Option<f64>,
    /// Heat-kernel time (default 1).
    #[arg(long)]
    pub t: Option<f64>,
    /// `uniform` or a file with one positive value per node (`value` or
    /// `node value` per line).
    #[arg(long, default_value = "uniform")]
    pub preference: String,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    /// Output file (default: standard output).
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long, value_enum)]
    pub measure: FamilyArg,
    #[arg(long, value_enum, default_value_t = SideArg::Broadcast)]
    pub side: SideArg,
    /// Comma-separated parameter values (β, α or PageRank α). Defaults to
    /// the standard grid for the measure.
    #[arg(long, value_delimiter = ',')]
    pub grid: Option<Vec<f64>>,
    /// Read `--grid` for Katz / resolvent subgraph as τ = αλ₁.
    #[arg(long)]
    pub normalized: bool,
    /// Number of leading positions compared (default: all nodes).
    #[arg(long)]
    pub k: Option<usize>,
    /// isim threshold for the informative band.
    #[arg(long, default_value_t = walkcent::ranking::DEFAULT_BAND_THRESHOLD)]
    pub threshold: f64,
    /// CSV output file; the convergence report goes next to it as
    /// `<out>.report.json`. Default: standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Print the sweep and report as one JSON document.
    #[arg(long)]
    pub json: bool,
}

#[derive(Args)]
pub struct CompareArgs {
    /// Score file (CSV with `node` and `score` columns).
    pub a: PathBuf,
    pub b: PathBuf,
    /// Number of leading positions compared (default: all nodes).
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Model {
    /// G(n, p).
    ErdosRenyi,
    /// Random spanning tree plus G(n, p) edges.
    Connected,
    /// Random directed Hamiltonian cycle plus G(n, p) arcs.
    StronglyConnected,
    Ring,
    Star,
}

#[derive(Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub model: Model,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0.1)]
    pub p: f64,
    #[arg(long)]
    pub directed: bool,
    /// Required for the random models.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Exit status 2 for anything the user can fix by changing the input or
/// parameters, 1 for numerical or I/O failures.
fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<io::UsageError>().is_some() {
        return 2;
    }
    match err.downcast_ref::<Error>() {
        Some(
            Error::Parse { .. }
            | Error::Validation(_)
            | Error::Format(_)
            | Error::Domain(_)
            | Error::Unsupported(_)
            | Error::Capacity { .. }
            | Error::EmptyGraph
            | Error::Disconnected(_)
            | Error::Mismatch(_),
        ) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(a) => commands::compute(&a),
        Command::Sweep(a) => commands::sweep(&a),
        Command::Compare(a) => commands::compare(&a),
        Command::PagerankDemo => commands::pagerank_demo(),
        Command::Generate(a) => commands::generate(&a),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
