use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use connset_core::DEFAULT_BUDGET;

/// Exact connected-set statistics for graph streams.
#[derive(Debug, Parser)]
#[command(name = "connset", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print N, S, A and D for every input graph.
    Compute {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        run: RunArgs,
        /// Add N(G,x) for every vertex x.
        #[arg(long)]
        profile: bool,
        /// Add the near-tree class of the block-cut tree.
        #[arg(long)]
        classify: bool,
    },
    /// Check statements on every input graph.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        run: RunArgs,
        /// Comma-separated statement ids, or `all`.
        #[arg(long, default_value = "all", value_delimiter = ',')]
        statements: Vec<String>,
        /// Report the slowest evaluation per statement in the summary.
        #[arg(long)]
        timings: bool,
        /// List the known statements and exit.
        #[arg(long)]
        list: bool,
    },
    /// Find the graphs with extreme average order or density.
    Search {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_enum, default_value_t = ObjectiveArg::D)]
        objective: ObjectiveArg,
        #[arg(long, value_enum, default_value_t = DirectionArg::Max)]
        direction: DirectionArg,
    },
    /// Time the statistics computation over the input.
    Bench {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input file, or `-` for standard input.
    #[arg(long, default_value = "-")]
    pub input: String,
    #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
    pub format: InputFormat,
    /// Family template such as `baton:L=2..8,k=L`; implies `--format family`.
    #[arg(long)]
    pub family: Vec<String>,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: u64,
    /// Recursion-node budget per graph and statement.
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    /// Output file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub output_format: Option<OutputFormat>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Graph6,
    Edges,
    Family,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Jsonl,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ObjectiveArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "D", alias = "d")]
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    Min,
    Max,
}
