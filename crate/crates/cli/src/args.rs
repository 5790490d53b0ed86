use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "subseq",
    version,
    about = "Subsequence automata with default transitions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build an automaton and write its document.
    Build {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        output: Output,
    },
    /// Run a pattern; exit 0 on accept, 1 on reject.
    Match {
        #[command(flatten)]
        source: Source,
        #[arg(long, allow_hyphen_values = true)]
        pattern: String,
        /// Print consumed states and defaults followed per character.
        #[arg(long)]
        trace: bool,
    },
    /// Size and delay measurements for one automaton.
    Stats {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        output: Output,
    },
    /// Check an automaton against the subsequence oracle and the reference
    /// construction; exit 3 on any failure.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        /// Largest number of patterns to enumerate.
        #[arg(long, default_value_t = 2_000_000)]
        enum_budget: usize,
        /// Sample this many seeded random patterns when the space is larger
        /// than the budget, instead of refusing.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Size/delay trade-off table over sa, chain, level and klevel.
    Bench {
        #[command(flatten)]
        text: TextArgs,
        /// Random input: length, alphabet size, seed.
        #[arg(long, num_args = 3, value_names = ["N", "SIGMA", "SEED"])]
        random: Option<Vec<u64>>,
        /// Bases for the klevel rows.
        #[arg(long, value_delimiter = ',', default_value = "2")]
        ks: Vec<u64>,
        #[arg(long)]
        sigma: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Render an automaton as DOT or as its document.
    Export {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Clone, Default, Args)]
pub struct TextArgs {
    /// Input string.
    #[arg(long, allow_hyphen_values = true)]
    pub text: Option<String>,
    /// Input file (repeat for several strings).
    #[arg(long = "file")]
    pub files: Vec<PathBuf>,
    /// Several input strings for multi-string variants.
    #[arg(long, num_args = 1..)]
    pub texts: Vec<String>,
    /// Read inputs and patterns as Unicode code points instead of bytes.
    #[arg(long)]
    pub unicode: bool,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Source {
    #[command(flatten)]
    pub text: TextArgs,
    /// sa | chain | level | klevel | naive-common | common-level | any-level
    #[arg(long)]
    pub variant: Option<String>,
    /// Level base for klevel (2 <= k <= sigma).
    #[arg(long)]
    pub k: Option<u64>,
    /// Multi-string mode when no explicit variant is given.
    #[arg(long, value_enum)]
    pub mode: Option<Mode>,
    /// Alphabet size override (at least the input alphabet).
    #[arg(long)]
    pub sigma: Option<usize>,
    /// Refuse multi-string builds with more product states than this.
    #[arg(long, default_value_t = subseq_core::multi::DEFAULT_STATE_BUDGET)]
    pub state_budget: usize,
    /// Drop klevel defaults that can never be taken on a matching path.
    #[arg(long)]
    pub strip_defaults: bool,
    /// Load an automaton document instead of building one.
    #[arg(long)]
    pub automaton: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Output {
    /// Output format; the default depends on the command.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Common,
    Any,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
    Dot,
}
