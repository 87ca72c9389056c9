use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "steiner-ecc", version, about = "Exact Steiner 3-eccentricity of trees")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Distances, segment structure and per-vertex ecc3 of one tree.
    Compute {
        #[command(flatten)]
        tree: TreeSource,
        /// Also report the average Steiner k-eccentricity for this k.
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Build a member of an extremal family and print its edge list.
    Construct {
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        delta: Option<usize>,
        /// Degree sequence, comma separated.
        #[arg(long)]
        pi: Option<String>,
        /// Spine order for `caterpillar`, comma separated.
        #[arg(long)]
        spine: Option<String>,
        /// Leg lengths for `generalized-star`, comma separated.
        #[arg(long)]
        segments: Option<String>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Apply one move or a whole reduction and report every step.
    Transform {
        kind: TransformKind,
        #[command(flatten)]
        tree: TreeSource,
        /// Which of the available sites a single sigma or pi move uses.
        #[arg(long, default_value_t = 0)]
        site_index: usize,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Closed-form maximum of aecc3 for a degree sequence or a family.
    Bound {
        #[arg(long, conflicts_with = "family")]
        pi: Option<String>,
        #[arg(long, required_unless_present = "pi")]
        family: Option<BoundFamily>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        delta: Option<usize>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Majorization between two sequences and the order of their maxima.
    Majorize {
        first: String,
        second: String,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// All trees of order n up to isomorphism, optionally grouped.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// degree_seq, segment_seq, segment_count, max_degree or count_max_degree.
        #[arg(long)]
        group: Option<String>,
        #[arg(long, env = "STEINER_ECC_CAP", default_value_t = steiner_ecc::census::DEFAULT_CAP)]
        cap: usize,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Check a claim on every tree of order n (or on random trees).
    Verify {
        /// Claim id (e.g. segment_sequence_min, sigma_mono) or `all`.
        #[arg(long, default_value = "all")]
        theorem: String,
        #[arg(long, required_unless_present = "random_trees")]
        n: Option<usize>,
        /// Check the move claims on this many Prüfer-random trees instead.
        #[arg(long, conflicts_with = "n")]
        random_trees: Option<usize>,
        #[arg(long, default_value_t = 3)]
        min_n: usize,
        #[arg(long, default_value_t = 60)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, env = "STEINER_ECC_CAP", default_value_t = steiner_ecc::census::DEFAULT_CAP)]
        cap: usize,
        #[command(flatten)]
        out: OutputOpts,
    },
}

#[derive(Args)]
pub struct TreeSource {
    #[command(flatten)]
    pub pick: SourcePick,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Exactly one way of obtaining the input tree.
#[derive(Args)]
#[group(required = true, multiple = false)]
pub struct SourcePick {
    /// Edge list file, one `u v` pair per line; `-` reads stdin.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Prüfer code, comma separated.
    #[arg(long)]
    pub prufer: Option<String>,
    /// Order of a Prüfer-random tree drawn with `--seed`.
    #[arg(long)]
    pub random: Option<usize>,
}

#[derive(Args)]
pub struct OutputOpts {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Family {
    Path,
    Star,
    Caterpillar,
    GeneralizedStar,
    BalancedStar,
    Broom,
    Cnk,
    CnDeltaK,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum TransformKind {
    Sigma,
    SigmaReduce,
    Pi,
    StarReduce,
    Rebalance,
    Balance,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum BoundFamily {
    AllTrees,
    MaxDegree,
    MaxDegreeCount,
    MaxDegreeWithCount,
}
