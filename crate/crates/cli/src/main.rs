use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

/// Solutions of M_n(a_1, ..., a_n) = ±Id over Z/NZ.
///
/// Sequences are comma-separated integers; negative entries are reduced
/// mod N. Modulus 0 selects integer mode where supported.
#[derive(Parser, Debug)]
#[command(name = "quiddity", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// The modulus N (0 for integer mode).
    #[arg(short, long, global = true, env = "QUIDDITY_MODULUS")]
    pub modulus: Option<u32>,
    #[arg(short, long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Override the work bound (generator multiplications).
    #[arg(long, global = true)]
    pub work_bound: Option<u128>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
    Svg,
}

#[derive(Args, Debug, Clone, Default)]
pub struct ShardArgs {
    /// Number of leading entries that pick the shard.
    #[arg(long, default_value_t = 2)]
    pub shard_depth: usize,
    #[arg(long, requires = "shard_count")]
    pub shard_index: Option<usize>,
    #[arg(long, requires = "shard_index")]
    pub shard_count: Option<usize>,
    /// Worker threads; 1 runs single-threaded.
    #[arg(short, long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Test whether a sequence is a solution.
    Check {
        #[arg(allow_hyphen_values = true)]
        seq: String,
    },
    /// The sum a ⊕ b.
    Sum {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Canonical representative under rotation and reversal.
    Canon {
        #[arg(allow_hyphen_values = true)]
        seq: String,
    },
    /// Find a decomposition witness, or report irreducibility.
    Reduce {
        #[arg(allow_hyphen_values = true)]
        seq: String,
    },
    /// List all solutions of the given sizes.
    Enumerate {
        /// A size `n` or a range `a-b`.
        sizes: String,
        #[command(flatten)]
        shard: ShardArgs,
    },
    /// Classify solutions of the given sizes into irreducible and reducible classes.
    Classify {
        /// A size `n` or a range `a-b`.
        sizes: String,
        #[arg(long)]
        irreducible_only: bool,
        /// Keep a decomposition witness for every reducible class.
        #[arg(long)]
        witnesses: bool,
        /// Compare with a saved JSON report; exit 1 on any difference.
        #[arg(long)]
        compare: Option<std::path::PathBuf>,
        #[command(flatten)]
        shard: ShardArgs,
    },
    /// Compare the irreducible classes with the shipped lists (N = 2..7) or a given file.
    Verify {
        /// File of `label a_1,...,a_n` lines to use instead of the shipped list.
        #[arg(long)]
        list: Option<std::path::PathBuf>,
    },
    /// Constant solutions (k, ..., k).
    Monomial {
        /// Minimal constant solution for this k; without it, every k is checked.
        #[arg(short, long, allow_hyphen_values = true)]
        k: Option<i64>,
        /// (l, ..., l) of length 2l modulo l^2.
        #[arg(long, conflicts_with_all = ["k", "power"])]
        square: Option<u32>,
        /// (l, ..., l) of length 2l^(e-1) modulo l^e, given as `l^e`. Experimental.
        #[arg(long, conflicts_with = "k")]
        power: Option<String>,
        /// M_n(2, ..., 2) in integer mode, against its closed form.
        #[arg(long, conflicts_with_all = ["k", "square", "power"])]
        all_twos: Option<usize>,
    },
    /// A dissection realizing a solution (N = 2, 3, 4), or a random one.
    Dissect {
        #[arg(allow_hyphen_values = true, required_unless_present = "random")]
        seq: Option<String>,
        /// Number of vertices of a random dissection.
        #[arg(long, conflicts_with = "seq")]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Replace quadrilaterals by triangles (N = 3).
        #[arg(long)]
        rewrite: bool,
    },
    /// A triangulation realizing a solution; for N outside 2..4 an exhaustive experimental search.
    Triangulate {
        #[arg(allow_hyphen_values = true)]
        seq: String,
    },
    /// Irreducible class counts up to a size, as evidence only.
    Evidence {
        /// Largest size scanned (default N + 3).
        #[arg(long)]
        n_max: Option<usize>,
    },
}

/// A failed run: exit code and message for the error stream.
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<quiddity::Error> for Failure {
    fn from(e: quiddity::Error) -> Self {
        use quiddity::Error::*;
        let code = match e {
            NoBaseDecomposition(_) | InvalidDissection(_) | OrderNotFound(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Vec::new();
    let result = commands::run(&cli.global, &cli.command, &mut out);
    // A closed pipe downstream is not an error worth reporting.
    match std::io::stdout().lock().write_all(&out) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
        _ => {}
    }
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
