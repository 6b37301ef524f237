//! Command-line driver for the `intrank-core` library.
//!
//! Subcommands generate poset documents, print interval ranks, iterate the
//! rank operator to a chain, search for conjugates of the strong interval
//! order and aggregate iteration statistics over a directory of documents.

pub mod commands;
pub mod document;
pub mod dot;

use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use intrank_core::Error as CoreError;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Invalid(String),
    Budget(String),
    Io(String),
    Core(CoreError),
}

impl CliError {
    /// 1 usage, 2 invalid input, 3 budget exceeded.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Budget(_)
            | CliError::Core(CoreError::BudgetExceeded(_))
            | CliError::Core(CoreError::CapExceeded(_)) => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Invalid(m) | CliError::Budget(m) | CliError::Io(m) => {
                f.write_str(m)
            }
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

#[derive(Debug, Parser)]
#[command(name = "intrank", version, about = "Interval ranks of finite posets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write poset documents, one file per poset
    Gen(GenArgs),
    /// Print the interval rank of every element
    Rank(RankArgs),
    /// Apply the rank operator until the poset becomes a chain
    Iterate(IterateArgs),
    /// Find orders conjugate to the strong interval order
    ConjugateSearch(ConjugateArgs),
    /// Iteration statistics over a directory of documents
    Stats(StatsArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Exhaustive,
    RandomGraph,
    RandomKdim,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub model: ModelArg,
    /// Size of each generated poset, bounds included
    #[arg(long)]
    pub n: usize,
    /// Edge probability for random-graph (default 0.5)
    #[arg(long)]
    pub p: Option<f64>,
    /// Number of linear orders for random-kdim (default 3)
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    /// Add a fresh bottom and top (default)
    #[arg(long, overrides_with = "no_bounds")]
    pub bounds: bool,
    #[arg(long = "no-bounds")]
    pub no_bounds: bool,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

impl GenArgs {
    pub fn add_bounds(&self) -> bool {
        !self.no_bounds
    }
}

#[derive(Debug, Args)]
pub struct InputArgs {
    pub file: PathBuf,
    /// Read a 0/1 matrix instead of a JSON document
    #[arg(long)]
    pub matrix: bool,
}

#[derive(Debug, Args)]
pub struct RankArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Conjugate ranks instead of standard ranks
    #[arg(long)]
    pub conjugate: bool,
}

#[derive(Debug, Args)]
pub struct IterateArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Print every intermediate rank poset
    #[arg(long)]
    pub trace: bool,
    /// Write one DOT file per stage into this directory
    #[arg(long)]
    pub dot: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ConjugateArgs {
    #[arg(long)]
    pub lo: u32,
    #[arg(long)]
    pub hi: u32,
    #[arg(long)]
    pub limit: Option<usize>,
    /// Allow endpoint ranges wider than 3
    #[arg(long)]
    pub force: bool,
    /// Leave out single-point intervals
    #[arg(long)]
    pub proper: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    Size,
    Height,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FitArg {
    Linear,
    Log,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    #[arg(long)]
    pub corpus: PathBuf,
    #[arg(long, value_enum, default_value = "size")]
    pub group: GroupArg,
    /// Write one record per poset here
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Fit each column of group means against the group key
    #[arg(long, value_enum)]
    pub fit: Option<FitArg>,
}

pub fn run(cli: Cli, out: &mut dyn std::io::Write) -> Result<(), CliError> {
    match cli.command {
        Command::Gen(a) => commands::gen(&a, out),
        Command::Rank(a) => commands::rank(&a, out),
        Command::Iterate(a) => commands::iterate(&a, out),
        Command::ConjugateSearch(a) => commands::conjugate_search(&a, out),
        Command::Stats(a) => commands::stats(&a, out),
    }
}
