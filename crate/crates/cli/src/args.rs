use std::path::PathBuf;

use clap::{Args as ClapArgs, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "argagg", version, about = "Aggregate labelings of abstract argumentation frameworks")]
pub struct Cli {
    /// Print a human-readable table instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,

    /// Refuse to enumerate labelings of frameworks with more arguments.
    #[arg(long, global = true, env = "ARGAGG_ARG_CAP", default_value_t = 16)]
    pub arg_cap: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate the labelings of a framework under a semantics.
    Labelings {
        #[command(flatten)]
        framework: FrameworkArg,
        #[arg(long, default_value = "complete")]
        semantics: String,
    },
    /// Aggregate a profile of ballots.
    Aggregate {
        #[command(flatten)]
        framework: FrameworkArg,
        #[command(flatten)]
        profile: ProfileArg,
        /// skeptical, credulous or super-credulous.
        #[arg(long)]
        op: String,
    },
    /// Compute the issues of a framework.
    Issues {
        #[command(flatten)]
        framework: FrameworkArg,
    },
    /// Disagreement between two labelings under a measure.
    Distance {
        #[command(flatten)]
        framework: FrameworkArg,
        /// hs, hd, iws, iwd, iuo-hs, iuo-hd, iuo-iws or iuo-iwd.
        #[arg(long)]
        measure: String,
        /// Labeling as inline JSON or `@path`.
        #[arg(long)]
        l1: String,
        #[arg(long)]
        l2: String,
        #[arg(long, default_value_t = 2.0)]
        alpha: f64,
    },
    /// How an agent with top labeling `top` ranks two labelings.
    Prefer {
        #[command(flatten)]
        framework: FrameworkArg,
        #[arg(long)]
        top: String,
        #[arg(long)]
        class: String,
        #[arg(long)]
        l1: String,
        #[arg(long)]
        l2: String,
        #[arg(long, default_value_t = 2.0)]
        alpha: f64,
    },
    /// Check a labeling (by default the operator outcome) for Pareto optimality.
    Pareto {
        #[command(flatten)]
        framework: FrameworkArg,
        #[command(flatten)]
        profile: ProfileArg,
        #[arg(long, default_value = "skeptical")]
        op: String,
        /// A class for everybody, or `agent=class,...`.
        #[arg(long)]
        class: String,
        /// adm-leq, adm-compat or comp-compat; defaults to the operator's set.
        #[arg(long)]
        candidates: Option<String>,
        /// Labeling to check instead of the operator outcome.
        #[arg(long)]
        labeling: Option<String>,
        #[arg(long, default_value_t = 2.0)]
        alpha: f64,
    },
    /// List the strategic lies available to one agent.
    Manipulate {
        #[command(flatten)]
        framework: FrameworkArg,
        #[command(flatten)]
        profile: ProfileArg,
        #[arg(long)]
        op: String,
        #[arg(long)]
        class: String,
        #[arg(long)]
        liar: String,
        #[arg(long, default_value = "complete")]
        lie_space: String,
        #[arg(long, default_value_t = 2.0)]
        alpha: f64,
    },
    /// Run the brute-force verification suite.
    Verify(VerifyArgs),
    /// Generate a random framework.
    Gen {
        #[arg(long = "args", env = "ARGAGG_GEN_ARGS", default_value_t = 6)]
        n_args: usize,
        #[arg(long, default_value_t = 0.3)]
        edge_prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = GenFormat::Json)]
        format: GenFormat,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum GenFormat {
    Json,
    Apx,
    Dot,
}

#[derive(Debug, ClapArgs)]
pub struct FrameworkArg {
    /// Framework file: apx text, or JSON when the name ends in `.json`; `-` reads stdin.
    #[arg(long, short = 'f')]
    pub framework: PathBuf,
}

#[derive(Debug, ClapArgs)]
pub struct ProfileArg {
    /// Profile JSON file: `{"agents": {"<id>": {"in": [...], "out": [...], "undec": [...]}}}`.
    #[arg(long, short = 'p')]
    pub profile: PathBuf,
    /// Semantics every ballot must satisfy.
    #[arg(long, default_value = "complete")]
    pub ballots: String,
}

#[derive(Debug, ClapArgs)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Frameworks up to this size are covered exhaustively (at most 4).
    #[arg(long, env = "ARGAGG_VERIFY_MAX_ARGS", default_value_t = 4)]
    pub max_args: usize,
    /// Number of random frameworks.
    #[arg(long, env = "ARGAGG_VERIFY_RANDOM", default_value_t = 1000)]
    pub random: usize,
    /// Random framework sizes, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = [5, 6, 7])]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 0.3)]
    pub edge_prob: f64,
    /// Agent counts, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = [2, 3])]
    pub agents: Vec<usize>,
    /// Ballot and lie semantics; anything but `complete` is experimental.
    #[arg(long, default_value = "complete")]
    pub ballots: String,
    #[arg(long, default_value_t = 2.0)]
    pub alpha: f64,
    /// Skip the pinned witness frameworks.
    #[arg(long)]
    pub no_pinned: bool,
    /// Also write the JSON report here.
    #[arg(long, short = 'o')]
    pub output: Option<PathBuf>,
}
