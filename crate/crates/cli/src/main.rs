//! `vincular`: command-line front end for the vincular pattern library.
//!
//! Exit codes: 0 on success, 1 when a table verification fails, 2 on usage
//! errors (bad flags, malformed input, `n` out of range).

mod commands;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::report::Report;

#[derive(Parser, Debug)]
#[command(
    name = "vincular",
    version,
    about = "Vincular pattern avoidance: counting, classification and bijections"
)]
struct Cli {
    /// Emit a versioned JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Include wall-clock timing in the JSON report.
    #[arg(long, global = true, requires = "json")]
    timing: bool,

    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    /// Lowers the largest accepted permutation length.
    #[arg(
        long = "max-n-bound",
        env = "VINCULAR_MAX_N",
        global = true,
        hide = true
    )]
    max_n_bound: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count occurrences of one pattern in a permutation.
    Count {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        perm: String,
        /// Also list the occurrences.
        #[arg(long)]
        occurrences: bool,
    },
    /// Count (or list) the permutations of length n avoiding a pattern set.
    Avoiders {
        #[arg(long)]
        patterns: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        list: bool,
    },
    /// Counting sequence |S_n(P)| for n = 0..=max-n.
    Sequence {
        #[arg(long)]
        patterns: String,
        #[arg(long = "max-n")]
        max_n: usize,
        /// Match the sequence against the catalog.
        #[arg(long)]
        identify: bool,
    },
    /// Symmetry and Wilf classes of all k-subsets of the twelve patterns.
    Classify {
        #[arg(long)]
        k: usize,
        /// Default: 9 for k <= 2, 8 otherwise.
        #[arg(long = "max-n")]
        max_n: Option<usize>,
    },
    /// Check the reference tables against enumeration.
    Verify(VerifyArgs),
    /// Apply one of the bijections or its inverse.
    Bijection(BijectionArgs),
    /// The class-2 avoider of length n ending in n, 1.
    Witness {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    table: Table,
    /// Set size for the multi table; all of 3..=12 when omitted.
    #[arg(long)]
    k: Option<usize>,
    /// Default: 9 for singles and pairs, 8 for multi.
    #[arg(long = "max-n")]
    max_n: Option<usize>,
    /// List every set's check, not only the panel summary (multi only).
    #[arg(long)]
    rows: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Table {
    Singles,
    Pairs,
    Multi,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("input").required(true).args(["perm", "inverse"]))]
struct BijectionArgs {
    #[arg(long, value_enum)]
    name: MapName,
    /// A permutation to map forward.
    #[arg(long)]
    perm: Option<String>,
    /// An element of the codomain to map back.
    #[arg(long)]
    inverse: Option<String>,
    /// Permutation length, needed to read a subset back.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MapName {
    Phi123,
    Phi132,
    Theta,
    PsiDyck,
    PsiComp,
    Subset,
    Binstring,
    Lambda,
    Smp,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    match commands::run(&cli) {
        Ok(outcome) => {
            if cli.json {
                let mut report: Report = outcome.report;
                if cli.timing {
                    report.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
                }
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                );
            } else {
                print!("{}", outcome.text);
            }
            if outcome.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
