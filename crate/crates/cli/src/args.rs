use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "laver", version, about = "Laver tables, their cocycles and braid invariants")]
pub struct Cli {
    /// Largest n any command will build.
    #[arg(long, global = true, env = "LAVER_MAX_N", default_value_t = laver::DEFAULT_MAX_N)]
    pub max_n: u32,

    /// Directory for cached binary tables; caching is off when unset.
    #[arg(long, global = true, env = "LAVER_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct TableArg {
    /// Table index: A_n has 2^n elements.
    #[arg(short = 'n')]
    pub n: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Json,
    Binary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CochainFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family2Arg {
    Phi,
    Psi,
    Theta,
    Const,
    ConstPrime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family3Arg {
    Phi,
    PhiPrime,
    Const,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifySuite {
    /// Every check below.
    All,
    /// Left-selfdistributivity sweep.
    Ld,
    /// All identity suites.
    Identities,
    LastColumn,
    Monotone,
    PlusOne,
    LastRows,
    Parity,
    Valuation,
    Monoid,
    /// Order axioms, structural facts and column occurrences.
    Poset,
    /// Cocycle families, ranks and properties of Z^2 and Z^3.
    Cocycles,
    /// Face-map commutation in the rack complex.
    Complex,
    /// Braid rewrites on a few fixed words.
    Braid,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print A_n.
    Table {
        #[command(flatten)]
        table: TableArg,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
        /// List rows from 2^n down to 1.
        #[arg(long)]
        descending: bool,
        /// Output file, `-` for stdout.
        #[arg(short, long, default_value = "-")]
        output: PathBuf,
    },
    /// Print p ⊳ q.
    Eval {
        #[command(flatten)]
        table: TableArg,
        p: u32,
        q: u32,
    },
    /// Period of row p, or of every row.
    Period {
        #[command(flatten)]
        table: TableArg,
        p: Option<u32>,
        /// Read periods off the ψ_{2^(n-1)} cocycle instead (p < 2^n).
        #[arg(long)]
        from_cocycle: bool,
    },
    /// Threshold of p, or of every p ≤ 2^(n-1).
    Threshold {
        #[command(flatten)]
        table: TableArg,
        p: Option<u32>,
        /// Read thresholds off the θ cocycle instead (p < 2^(n-1)).
        #[arg(long)]
        from_cocycle: bool,
    },
    /// Print p ∘ q, or the whole composition table.
    Comp {
        #[command(flatten)]
        table: TableArg,
        p: Option<u32>,
        q: Option<u32>,
    },
    /// The right-divisibility order.
    Poset {
        #[command(flatten)]
        table: TableArg,
        /// Write the Hasse diagram as DOT (`-` for stdout).
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Least upper and greatest lower bound of a pair.
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        bounds: Option<Vec<u32>>,
    },
    /// Print a 2-cochain of one of the named families.
    Cocycle2 {
        #[command(flatten)]
        table: TableArg,
        #[arg(long, value_enum)]
        family: Family2Arg,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long, value_enum, default_value_t = CochainFormat::Text)]
        format: CochainFormat,
        /// Also check the cocycle equation; exit 1 if it fails.
        #[arg(long)]
        check: bool,
    },
    /// Print a 3-cochain of one of the named families.
    Cocycle3 {
        #[command(flatten)]
        table: TableArg,
        #[arg(long, value_enum)]
        family: Family3Arg,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long, value_enum, default_value_t = CochainFormat::Text)]
        format: CochainFormat,
        #[arg(long)]
        check: bool,
    },
    /// Coordinates of a 2-cocycle in the basis φ_1, …, φ_{2^n-1}, const.
    Decompose {
        #[command(flatten)]
        table: TableArg,
        /// Cochain JSON file (`-` for stdin).
        #[arg(long, conflicts_with = "psi", required_unless_present = "psi")]
        input: Option<PathBuf>,
        /// Decompose ψ_q instead of a file.
        #[arg(long)]
        psi: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// H^k(A_n) as an abelian group.
    Cohomology {
        #[command(flatten)]
        table: TableArg,
        #[arg(short)]
        k: u32,
        #[arg(long)]
        json: bool,
    },
    /// Run verification suites; exit 1 on any failure.
    Verify {
        #[command(flatten)]
        table: TableArg,
        #[arg(long, value_enum, default_value_t = VerifySuite::All)]
        suite: VerifySuite,
        /// Print reports as JSON lines.
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 0x1a7e5)]
        seed: u64,
    },
    /// Color a positive braid word and evaluate a cocycle invariant.
    Braid {
        #[command(flatten)]
        table: TableArg,
        /// Number of strands.
        #[arg(short, long)]
        strands: usize,
        /// Generator indices, e.g. "1 2 1".
        #[arg(short, long, allow_hyphen_values = true)]
        word: String,
        /// Initial colors bottom to top, comma separated; all 1 by default.
        #[arg(short, long, value_delimiter = ',')]
        colors: Option<Vec<u32>>,
        /// Use ψ_q as the 2-cocycle.
        #[arg(long, group = "weight")]
        psi: Option<u32>,
        /// Use φ_q as the 2-cocycle.
        #[arg(long, group = "weight")]
        phi: Option<u32>,
        /// Use φ_{p,q} as the 3-cocycle.
        #[arg(long, group = "weight", num_args = 2, value_names = ["P", "Q"])]
        phi3: Option<Vec<u32>>,
        /// Cochain JSON file (arity 2 or 3).
        #[arg(long, group = "weight")]
        cocycle: Option<PathBuf>,
        /// Color of the top region, for 3-cocycles; 2^n by default.
        #[arg(long)]
        top: Option<u32>,
        /// Compare with every one-move rewrite; exit 1 on a mismatch.
        #[arg(long)]
        rewrites: bool,
        #[arg(long, default_value_t = 0xb7a1d)]
        seed: u64,
        /// Write the coloring trace as JSON (`-` for stdout).
        #[arg(long)]
        trace: Option<PathBuf>,
    },
}
