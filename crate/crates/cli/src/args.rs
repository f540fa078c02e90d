use std::path::PathBuf;

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "jtgraph",
    version,
    about = "Entropies and Jensen-Tsallis divergences of graph Laplacian density matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Entropy of one graph's Laplacian density matrix
    Entropy(EntropyArgs),
    /// Jensen-Tsallis divergence between two or more graphs
    Divergence(DivergenceArgs),
    /// Normalized pairwise divergence matrix of a corpus, as CSV
    Pairwise(PairwiseArgs),
    /// Spectrum of one graph's Laplacian density matrix, as CSV
    Spectrum(SpectrumArgs),
    /// Tsallis entropy of diag(p, 1-p) over a grid of p, as CSV
    Figure(FigureArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Auto,
    Edges,
    Mtx,
    Off,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Measure {
    Tsallis,
    Renyi,
    VonNeumann,
}

impl Measure {
    pub fn name(self) -> &'static str {
        match self {
            Measure::Tsallis => "tsallis",
            Measure::Renyi => "renyi",
            Measure::VonNeumann => "von-neumann",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct ReadArgs {
    /// Input format; `auto` picks by extension (.edges/.txt, .mtx, .off)
    #[arg(long, value_enum, default_value_t = Format::Auto)]
    pub format: Format,

    /// Edge-list indices start at 1
    #[arg(long)]
    pub one_based: bool,
}

#[derive(Debug, Clone, Args)]
pub struct OutArgs {
    /// Write data here instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EntropyArgs {
    #[arg(long)]
    pub input: PathBuf,

    #[arg(long, value_enum, default_value_t = Measure::Tsallis)]
    pub measure: Measure,

    /// Entropic index (ignored by von-neumann)
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    pub alpha: f64,

    #[command(flatten)]
    pub read: ReadArgs,

    #[command(flatten)]
    pub output: OutArgs,
}

#[derive(Debug, Args)]
pub struct DivergenceArgs {
    #[arg(long, num_args = 1.., required = true)]
    pub inputs: Vec<PathBuf>,

    /// Comma-separated weights, one per input; uniform when omitted
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub weights: Option<Vec<f64>>,

    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    pub alpha: f64,

    #[command(flatten)]
    pub read: ReadArgs,

    #[command(flatten)]
    pub output: OutArgs,
}

#[derive(Debug, Args)]
pub struct PairwiseArgs {
    #[arg(long, num_args = 1.., conflicts_with = "dir", required_unless_present = "dir")]
    pub inputs: Vec<PathBuf>,

    /// Read every graph file in this directory, in file-name order
    #[arg(long)]
    pub dir: Option<PathBuf>,

    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    pub alpha: f64,

    /// Divide each divergence by its upper bound H_alpha(1/2, 1/2)
    #[arg(long, default_value_t = true, action = ArgAction::Set)]
    pub normalized: bool,

    /// Skip inputs that fail to parse or whose vertex count differs from the first usable input
    #[arg(long)]
    pub skip_bad: bool,

    #[command(flatten)]
    pub read: ReadArgs,

    #[command(flatten)]
    pub output: OutArgs,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long)]
    pub input: PathBuf,

    /// Also write the density matrix as row-major CSV to this path
    #[arg(long)]
    pub dump_matrix: Option<PathBuf>,

    #[command(flatten)]
    pub read: ReadArgs,

    #[command(flatten)]
    pub output: OutArgs,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    /// Comma-separated entropic indices; 0 is allowed here and means tr(rho^0) - 1
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "0,0.5,1,2",
        allow_negative_numbers = true
    )]
    pub alpha_list: Vec<f64>,

    /// Number of evenly spaced p values in [0, 1]
    #[arg(long, default_value_t = 101)]
    pub grid: usize,

    #[command(flatten)]
    pub output: OutArgs,
}
