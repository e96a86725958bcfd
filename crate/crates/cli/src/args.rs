//! Command-line surface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "vug",
    version,
    about = "Valid utility games under information-sharing constraints: \
             graph analysis, equilibrium enumeration, price-of-anarchy bounds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute information groups, reciprocal subgraph, independence
    /// quantities and all three bounds for a graph.
    AnalyzeGraph(AnalyzeArgs),
    /// Generate a tight worst-case game for a graph and verify it.
    WorstCase(WorstCaseArgs),
    /// Enumerate the pure equilibria of a game file, with certification.
    Equilibria(EquilibriaArgs),
    /// Stress-test the bounds on seeded random games over one graph.
    Verify(VerifyArgs),
    /// Tabulate bounds and worst-case ratios for attack graphs over a range
    /// of sizes.
    Sweep(SweepArgs),
}

#[derive(Args, Debug, Clone)]
pub struct GraphInput {
    /// Path to a graph file (`n m` header, then `j i` edge lines).
    #[arg(long, value_name = "PATH", conflicts_with = "complete")]
    pub graph: Option<PathBuf>,
    /// Use the complete graph on N agents instead of a file.
    #[arg(long, value_name = "N")]
    pub complete: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    /// The information-group worst case (crafted utilities).
    #[value(name = "1")]
    One,
    /// The shared-resource upper-bound construction (plain MC utilities).
    #[value(name = "prop3")]
    Prop3,
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub input: GraphInput,
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct WorstCaseArgs {
    #[command(flatten)]
    pub input: GraphInput,
    #[arg(long, value_enum)]
    pub theorem: Theorem,
    /// Exact rational in (0,1), e.g. 1/1000.
    #[arg(long, value_name = "P/Q", default_value = "1/1000")]
    pub epsilon: String,
    /// Write the generated game file here.
    #[arg(long, value_name = "PATH")]
    pub out_game: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct EquilibriaArgs {
    /// Path to a game file.
    #[arg(long, value_name = "PATH")]
    pub game: PathBuf,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: GraphInput,
    /// Number of random games to generate.
    #[arg(long, default_value_t = 200)]
    pub count: u32,
    /// RNG seed; identical seeds give byte-identical reports.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Smallest attack-graph size (at least 2).
    #[arg(long, default_value_t = 2)]
    pub min: usize,
    /// Largest attack-graph size.
    #[arg(long, default_value_t = 8)]
    pub max: usize,
    #[arg(long, value_name = "P/Q", default_value = "1/1000")]
    pub epsilon: String,
    /// Largest size for which the worst-case game is enumerated exhaustively.
    #[arg(long, default_value_t = 12)]
    pub enumerate_up_to: usize,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}
