use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "kiter",
    version,
    about = "Iterates, involutory orders and cycles of multivariate maps f: X^k -> X"
)]
pub struct Cli {
    /// Print a JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

/// Where the map comes from: a definition such as `f(x1,x2) = x1 + x2`, or
/// a finite table file.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Map definition, e.g. "f(x1,x2) = zeta(3)*x1 + zeta(3)^2*x2".
    #[arg(long, value_name = "DEF")]
    pub def: Option<String>,

    /// Finite table file ("m k" header followed by m^k values).
    #[arg(long, value_name = "FILE")]
    pub table: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The n-th iterate f^n(seed).
    Iterate {
        #[command(flatten)]
        input: Input,
        /// Comma-separated initial terms.
        #[arg(long, allow_hyphen_values = true)]
        seed: String,
        #[arg(long)]
        n: u64,
    },
    /// The states seed, f^1(seed), f^2(seed), .. until the seed recurs.
    Orbit {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        seed: String,
        /// Maximum number of states to list.
        #[arg(long, default_value_t = 1000)]
        bound: usize,
    },
    /// Minimal n with f^n = id: exact for tables, searched up to --bound for
    /// affine definitions.
    Order {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 50)]
        bound: u64,
    },
    /// Minimal n with f^n(seed) = seed.
    PointOrder {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        seed: String,
        #[arg(long, default_value_t = 10_000)]
        bound: u64,
    },
    /// Whether every induced one-argument map has identity n-th iterate.
    CheckIi {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        n: u64,
        /// Only check this argument (1-based).
        #[arg(long)]
        arg: Option<usize>,
    },
    /// Whether f is invariant under permuting its arguments.
    Symmetric {
        #[command(flatten)]
        input: Input,
    },
    /// Cycle structure of the first iterate of a table.
    Cycles {
        #[command(flatten)]
        input: Input,
    },
    /// Minimal period of the sequence a_{n+k} = f(a_n, .., a_{n+k-1}).
    Period {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        seed: String,
        /// Number of terms to generate.
        #[arg(long, default_value_t = 10_000)]
        bound: usize,
    },
    /// All tables on {0..m-1}^k whose induced maps are all involutions.
    EnumerateIi {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        /// Only print the number of tables.
        #[arg(long)]
        count_only: bool,
        /// Refuse when m^k exceeds this.
        #[arg(long, default_value_t = 1_000_000)]
        max_states: u128,
    },
    /// Number of involutions of an m-element set.
    CountInvolutions {
        #[arg(long)]
        m: usize,
    },
    /// State periods versus sequence periods for every cyclic state of a table.
    Claim1 {
        #[command(flatten)]
        input: Input,
    },
    /// Lift f to a larger arity by continuing its recurrence.
    Augment {
        #[command(flatten)]
        input: Input,
        #[arg(long = "to", value_name = "K")]
        to: usize,
    },
    /// The table of g^-1 ∘ f ∘ g̃ for a permutation g of the symbols.
    Conjugate {
        #[command(flatten)]
        input: Input,
        /// Images g(0),..,g(m-1), comma-separated.
        #[arg(long, value_delimiter = ',', required = true)]
        perm: Vec<usize>,
    },
    /// Checks the built-in worked examples.
    VerifyExamples,
}
