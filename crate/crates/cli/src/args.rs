use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "axes-ideals",
    version,
    about = "Monomial ideal arithmetic and containment checks for the coordinate-axes ideal"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Use the coordinate-axes ideal I(2,n) in n variables
    #[arg(long, global = true, value_name = "N")]
    pub axes: Option<usize>,

    /// Load an ideal file (repeatable for `intersect`)
    #[arg(long, global = true, value_name = "FILE")]
    pub ideal: Vec<PathBuf>,

    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,

    /// Write the payload to a file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Print the violated inequality or a witnessing factorization
    #[arg(long, global = true)]
    pub explain: bool,

    #[arg(long, global = true, value_enum, default_value_t = Engine::Fast)]
    pub engine: Engine,

    #[arg(long, global = true, value_name = "N")]
    pub max_n: Option<usize>,

    #[arg(long, global = true, value_name = "M")]
    pub max_m: Option<u64>,

    #[arg(long, global = true, value_name = "D")]
    pub max_degree: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    /// Closed-form inequalities (requires --axes)
    Fast,
    /// Explicit generators of the power or symbolic power
    Core,
    /// Brute-force factorization search / prime-power membership
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Ordinary,
    Symbolic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Decomposition,
    Symbolic,
    Engines,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a monomial lies in I^m or I^(m)
    Member {
        #[arg(short = 'm', value_name = "M")]
        m: u64,
        #[arg(long, value_enum, default_value_t = Mode::Ordinary)]
        mode: Mode,
        /// `x1^2*x2` or `[2,1]`
        monomial: String,
    },
    /// Emit a factorization certificate for membership in I(2,n)^m
    Certify {
        #[arg(short = 'm', value_name = "M")]
        m: u64,
        monomial: String,
    },
    /// Check a certificate file against a monomial
    Verify {
        certificate: PathBuf,
        monomial: String,
    },
    /// Ordinary power I^m
    Power {
        #[arg(short = 'm', value_name = "M")]
        m: u64,
    },
    /// Symbolic power I^(k) of a squarefree ideal
    Symbolic {
        #[arg(short = 'k', value_name = "K")]
        k: u64,
    },
    /// Intersection of the given ideals
    Intersect {
        /// Additional ideal files
        files: Vec<PathBuf>,
    },
    /// Decide inner ⊆ outer
    Contains {
        /// Outer ideal is the m-th ordinary power of the selected ideal
        #[arg(long, value_name = "M")]
        power: Option<u64>,
        /// Inner ideal is the d-th symbolic power of the selected ideal
        #[arg(long, value_name = "D")]
        symbolic: Option<u64>,
        #[arg(long, value_name = "FILE", conflicts_with = "power")]
        outer: Option<PathBuf>,
        #[arg(long, value_name = "FILE", conflicts_with = "symbolic")]
        inner: Option<PathBuf>,
    },
    /// Minimal primes of a squarefree ideal
    Primes,
    /// Containment thresholds against the (2 - 2/n)m and 2m bounds
    Survey {
        /// Values of n, e.g. `3`, `3,4`, `3..6`
        #[arg(short = 'n', value_name = "LIST")]
        n: String,
        /// Values of m, e.g. `1,2` or `1..4`
        #[arg(short = 'm', value_name = "LIST")]
        m: String,
    },
    /// Run grid verifications and print a pass/fail table
    Check {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(short = 'n', value_name = "LIST")]
        n: String,
        #[arg(short = 'm', value_name = "LIST")]
        m: String,
    },
}
