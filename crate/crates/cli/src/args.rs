use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "cbrauer", version, about = "Exact computations in cyclotomic Brauer algebras")]
pub struct Cli {
    #[command(flatten)]
    pub job: JobArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct JobArgs {
    /// Number of label residues.
    #[arg(short = 'm', global = true, default_value_t = 1)]
    pub m: u32,
    /// Number of strands.
    #[arg(short = 'n', global = true, default_value_t = 2)]
    pub n: usize,
    /// Loop parameters δ_0,…,δ_{m−1}: comma-separated rationals, or
    /// `@file.json` holding a list of cyclotomic numbers.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub delta: Option<String>,
    /// Seed for generic parameters; required when --delta is absent.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Use the unoriented algebra.
    #[arg(long, global = true)]
    pub unoriented: bool,
    /// Worker threads for independent matrix cells.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum DecompMode {
    Direct,
    Factorized,
    Diff,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimension m^n (2n−1)!!.
    Dim,
    /// List the basis diagrams.
    Basis,
    /// Multiply two diagrams given as JSON files.
    Mul {
        left: PathBuf,
        right: PathBuf,
    },
    /// Hasse diagram of the poset on m-compositions.
    Poset {
        /// Connected component containing this composition.
        #[arg(long, conflicts_with = "down")]
        component: Option<String>,
        /// Down-set of this composition.
        #[arg(long)]
        down: Option<String>,
        /// Display order of the components, e.g. `1,2,0`.
        #[arg(long)]
        display: Option<String>,
    },
    /// Restriction multiplicities to the through-strand subalgebra:
    /// closed formula against the character oracle.
    RestrictMult {
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        mu: Option<String>,
    },
    /// Truncated algebra for ω with an isomorphism certificate.
    Truncate {
        #[arg(long)]
        omega: String,
        /// Check every pair of basis elements instead of generator pairs.
        #[arg(long)]
        all_pairs: bool,
    },
    /// dim Hom(Δ(λ), Δ(μ)), directly and through the factorisation.
    Hom {
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        mu: Option<String>,
    },
    /// Decomposition matrix.
    Decomp {
        #[arg(long, value_enum, default_value_t = DecompMode::Direct)]
        mode: DecompMode,
        /// Classical decomposition tables (CSV) for factorized mode.
        #[arg(long)]
        tables: Option<PathBuf>,
        /// Write the classical tables used by factorized mode.
        #[arg(long)]
        write_tables: Option<PathBuf>,
    },
    /// Radical-based semisimplicity check.
    Semisimple,
    /// Blocks as connected components of the decomposition matrix.
    Blocks,
}
