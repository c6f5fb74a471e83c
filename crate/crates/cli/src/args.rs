use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use swiftwalk::swift::MethodChoice;

#[derive(Debug, Parser)]
#[command(name = "swiftwalk", version, about = "Swift chiral quantum walks on graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Return-probability series and summary for a walk from one vertex.
    Simulate(SimulateArgs),
    /// Swift phase configuration for a graph, or a swift walk from `--from`.
    Synthesize(SynthesizeArgs),
    /// Check a phase file against the swift-walk conditions.
    Verify(VerifyArgs),
    /// Speed-limit and Laplacian no-go bounds from one vertex.
    Bound(BoundArgs),
    /// Write a named graph family as an edge list.
    Generate(GenerateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Generator {
    Adjacency,
    Laplacian,
    ChiralAdjacency,
    ChiralLaplacian,
    GroverOracle,
}

impl Generator {
    pub fn is_chiral(self) -> bool {
        matches!(self, Generator::ChiralAdjacency | Generator::ChiralLaplacian)
    }

    pub fn is_laplacian(self) -> bool {
        matches!(self, Generator::Laplacian | Generator::ChiralLaplacian)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MethodArg {
    Auto,
    Even,
    OddRegular,
    Bipartite,
    Numeric,
}

impl From<MethodArg> for MethodChoice {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => MethodChoice::Auto,
            MethodArg::Even => MethodChoice::Even,
            MethodArg::OddRegular => MethodChoice::OddRegular,
            MethodArg::Bipartite => MethodChoice::Bipartite,
            MethodArg::Numeric => MethodChoice::Numeric,
        }
    }
}

#[derive(Debug, Args)]
pub struct Input {
    /// Edge-list or JSON graph file.
    #[arg(long)]
    pub graph: PathBuf,
    /// Phase file (`{"edges": [{"u", "v", "theta"}]}`).
    #[arg(long)]
    pub phases: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Grid {
    #[arg(long, default_value_t = 10.0)]
    pub t_max: f64,
    /// Number of grid points, endpoints included.
    #[arg(long, default_value_t = 1000)]
    pub steps: usize,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub input: Input,
    #[arg(long, value_enum, default_value_t = Generator::Adjacency)]
    pub generator: Generator,
    #[arg(long, default_value_t = 0)]
    pub from: usize,
    #[command(flatten)]
    pub grid: Grid,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output directory.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct SynthesizeArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
    /// Build a swift walk from this vertex instead of a swift
    /// configuration of the whole graph.
    #[arg(long)]
    pub from: Option<usize>,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: Input,
    #[arg(long, value_enum, default_value_t = Generator::ChiralAdjacency)]
    pub generator: Generator,
    #[arg(long, default_value_t = 0)]
    pub from: usize,
    #[command(flatten)]
    pub grid: Grid,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    /// Seed of the random gauge used by the invariance check.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[command(flatten)]
    pub input: Input,
    #[arg(long, value_enum, default_value_t = Generator::Adjacency)]
    pub generator: Generator,
    #[arg(long, default_value_t = 0)]
    pub from: usize,
    #[command(flatten)]
    pub grid: Grid,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random chiral-Laplacian phase draws for the observed minimum.
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// `name[:p[,q]]`, e.g. `wheel:6`, `complete-bipartite:3,4`, `petersen`.
    #[arg(long)]
    pub family: String,
    /// Join a new vertex `0` to every vertex of the family graph.
    #[arg(long)]
    pub cone: bool,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}
