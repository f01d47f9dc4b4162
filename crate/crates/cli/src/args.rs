use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "pinquad", version, about = "Quadratic functions, cup-i products and G-groups on triangulated manifolds")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Jsonl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Pin,
    Spin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Formula,
    Bruteforce,
}

/// Where the complex comes from. Exactly one is required.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// A bundled triangulation (rp2, torus, klein, mobius, annulus, ...).
    #[arg(long)]
    pub fixture: Option<String>,
    /// A complex file; a `dim` line makes it a manifold.
    #[arg(long)]
    pub complex: Option<PathBuf>,
    /// A complex file whose `boundary` lines give the subcomplex.
    #[arg(long)]
    pub pair: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// f-vector, manifold and orientation status.
    Info {
        #[command(flatten)]
        source: Source,
    },
    /// Mod-2 relative cohomology dimensions, optionally with basis files.
    Cohomology {
        #[command(flatten)]
        source: Source,
        /// Only this degree (default: every degree).
        #[arg(long)]
        degree: Option<usize>,
        /// Write one cochain file per basis class into this directory.
        #[arg(long)]
        write_basis: Option<PathBuf>,
    },
    /// Quadratic functions on a manifold.
    Quad {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = ModeArg::Pin, global = true)]
        mode: ModeArg,
        #[command(subcommand)]
        action: QuadAction,
    },
    /// The group G_n^pin(X, Y) (or the spin profile with --mode spin).
    Ggroup {
        #[command(flatten)]
        source: Source,
        /// Degree n (default: the manifold dimension).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = EngineArg::Formula)]
        engine: EngineArg,
        #[arg(long, value_enum, default_value_t = ModeArg::Pin)]
        mode: ModeArg,
        /// Largest number of pairs the brute-force engine may enumerate.
        #[arg(long, default_value_t = 1 << 24)]
        budget: u64,
    },
    /// Randomized checks of the cochain identities.
    Identities {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 5)]
        max_dim: usize,
        /// Run only these suites (repeatable).
        #[arg(long = "suite")]
        suites: Vec<String>,
        /// Drop a sign from the cup-i formula (a mutation control).
        #[arg(long, hide = true)]
        mutated_sign: bool,
    },
}

/// Selects one function: by position in the enumeration, or by its values
/// on the cohomology basis.
#[derive(Debug, Args)]
pub struct Pick {
    #[arg(long, conflicts_with = "values")]
    pub index: Option<usize>,
    /// Comma-separated values in Z/4 on the basis classes.
    #[arg(long, value_delimiter = ',')]
    pub values: Option<Vec<i64>>,
}

#[derive(Debug, Subcommand)]
pub enum QuadAction {
    /// Every quadratic function, by its basis values.
    Enumerate,
    /// Q(p) for a relative cocycle p.
    Eval {
        #[command(flatten)]
        pick: Pick,
        #[arg(long)]
        cochain: PathBuf,
    },
    /// Q_a for an absolute 1-cocycle a.
    Act {
        #[command(flatten)]
        pick: Pick,
        #[arg(long)]
        cochain: PathBuf,
    },
    /// -Q.
    Negate {
        #[command(flatten)]
        pick: Pick,
    },
    /// The induced function on the boundary.
    Boundary {
        #[command(flatten)]
        pick: Pick,
    },
    /// Brown invariants of every function on a closed surface.
    Brown,
    /// Randomized check of the defining rules for every function.
    Verify {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}
