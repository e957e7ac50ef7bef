//! `weyl-ext`: dimensions of Ext-groups between Weyl modules for GL₂.

mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    name = "weyl-ext",
    version,
    about = "Exact Ext-group dimensions between Weyl modules for GL₂ in characteristic p"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Query {
    /// Characteristic p.
    #[arg(short = 'p')]
    pub p: i64,
    /// Ext degree k.
    #[arg(short = 'k', allow_negative_numbers = true)]
    pub k: i64,
    /// Source index m (Δ_m).
    #[arg(short = 'm', allow_negative_numbers = true)]
    pub m: i64,
    /// Target index e (Δ_e).
    #[arg(short = 'e', allow_negative_numbers = true)]
    pub e: i64,
    /// Block exponent q; defaults to the smallest q with m, e <= p^q.
    #[arg(short = 'q')]
    pub q: Option<u32>,
    /// Print the contributing terms (or the basis tuples for `oracle`).
    #[arg(long)]
    pub verbose: bool,
}

#[derive(Args, Debug, Clone)]
pub struct TableArgs {
    #[arg(short = 'p')]
    pub p: i64,
    #[arg(short = 'q')]
    pub q: u32,
    #[arg(short = 'k')]
    pub k: i64,
    /// Fix the source index: two-column output `e,dim`.
    #[arg(short = 'm', conflicts_with = "e")]
    pub m: Option<i64>,
    /// Fix the target index: two-column output `m,dim`.
    #[arg(short = 'e')]
    pub e: Option<i64>,
    /// Worker threads (0 = one per available core).
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[arg(short = 'p')]
    pub p: i64,
    #[arg(short = 'q')]
    pub q: u32,
    /// Check a single degree instead of every 0 <= k < p^q.
    #[arg(short = 'k')]
    pub k: Option<i64>,
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
}

#[derive(Subcommand, Debug, Clone)]
pub enum PartitionKind {
    /// q_p(D, d): representations D = Σ n_i p^i with Σ n_i = d.
    Q {
        #[arg(short = 'p')]
        p: i64,
        #[arg(short = 'D', allow_negative_numbers = true)]
        big_d: i64,
        #[arg(short = 'd', allow_negative_numbers = true)]
        d: i64,
    },
    /// r_p(M, d), or r_p^h(M, d) with -H.
    R {
        #[arg(short = 'p')]
        p: i64,
        #[arg(short = 'M', allow_negative_numbers = true)]
        big_m: i64,
        #[arg(short = 'd', allow_negative_numbers = true)]
        d: i64,
        #[arg(short = 'H')]
        h: Option<u32>,
    },
    /// Lower bound for Z_p(d): the maximum of r_p(M, d) over 0 <= M <= --max.
    Z {
        #[arg(short = 'p')]
        p: i64,
        #[arg(short = 'd')]
        d: i64,
        /// Scan limit; defaults to p^(e+3) with e least such that p^e >= d+1.
        #[arg(long = "max")]
        max: Option<i64>,
    },
    /// Base-p digit sum of D.
    Sigma {
        #[arg(short = 'p')]
        p: i64,
        #[arg(short = 'D')]
        big_d: i64,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// dim Ext^k(Δ_m, Δ_e) from the recursion.
    Dim(Query),
    /// dim Ext^k(Δ_m, Δ_e) by enumerating basis tuples.
    Oracle(Query),
    /// CSV table of dimensions over a block: rows e, columns m.
    Table(TableArgs),
    /// Check recursion = enumeration, duality and q-stability over a block.
    Verify(VerifyArgs),
    /// `M,count` lines of r_p(M, d) for 0 <= M <= --max.
    Series {
        #[arg(short = 'p')]
        p: i64,
        #[arg(short = 'd')]
        d: i64,
        #[arg(long = "max")]
        max: i64,
    },
    /// Single partition-function values.
    #[command(subcommand)]
    Partition(PartitionKind),
    /// Evaluate the growth bounds at k (dimension bounds) or d (partition bounds).
    Bounds {
        #[arg(short = 'p')]
        p: i64,
        #[arg(short = 'k', conflicts_with = "d", required_unless_present = "d")]
        k: Option<i64>,
        #[arg(short = 'd')]
        d: Option<i64>,
    },
    /// Block indices of the Weyl modules with highest weights λ and μ.
    ///
    /// The λ-derived index is printed as e and the μ-derived index as m,
    /// ready for `dim -m M -e E`.
    Weights {
        #[arg(short = 'p')]
        p: i64,
        #[arg(long = "lambda")]
        lambda: i64,
        #[arg(long = "mu")]
        mu: i64,
    },
}

/// Usage/input problems exit with 1, failed checks with 2.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Check(String),
}

impl From<weyl_ext::Error> for Failure {
    fn from(e: weyl_ext::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut out = std::io::stdout().lock();
    let result = commands::run(cli.command, &mut out);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}
