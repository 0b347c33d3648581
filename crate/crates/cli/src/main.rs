//! `natmat` — command-line surface for the natural-matrix toolkit.
//!
//! Exit codes are a stable scripting contract:
//! 0 success, 1 verification failure, 2 usage error, 3 resource limit,
//! 4 network or cache trouble.

mod commands;
mod output;

use clap::{Parser, Subcommand, ValueEnum};
use natmat_core::Nat;
use output::Format;

fn parse_nat(s: &str) -> Result<Nat, String> {
    s.parse::<Nat>()
        .map_err(|_| format!("{s:?} is not a non-negative integer"))
}

#[derive(Parser)]
#[command(
    name = "natmat",
    version,
    about = "Mersenne chains, the natural-matrix packing bijection, Dyck segments, \
             prime censuses, and OEIS cross-checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyWhat {
    /// Every n < bound sits in exactly one Mersenne chain
    Trees,
    /// Every n < bound sits in exactly one column progression
    Progressions,
    /// pack/unpack round-trips below the bound and over a coordinate grid
    Bijection,
    /// Streaming Dyck predicate equals the suffix-counting oracle
    Dyck,
}

#[derive(Clone, Copy, ValueEnum)]
enum OeisCheck {
    /// The twelve identified chains match their OEIS b-files
    Table1,
    /// Dyck numbers below the bound match the A036991 b-file
    Dyck,
    /// Prime Dyck numbers below the bound match the A350577 b-file
    Primes,
}

#[derive(Clone, Copy, ValueEnum)]
enum FetchModeArg {
    /// Never touch the network
    CacheOnly,
    /// Download and cache missing b-files
    Fetch,
}

#[derive(Subcommand)]
enum Command {
    /// First terms of the Mersenne chain rooted at 2k (non-Dyck terms flagged *)
    Tree {
        #[arg(value_parser = parse_nat)]
        k: Nat,
        count: u32,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// First terms of the arithmetic progression in column n
    Progression {
        n: u32,
        count: u32,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Pack coordinate (x, y) into (2x+1)·2^y − 1
    Pack {
        #[arg(value_parser = parse_nat)]
        x: Nat,
        y: u32,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Recover the coordinate packed into n
    Unpack {
        #[arg(value_parser = parse_nat)]
        n: Nat,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Descriptor and terms of the initial Dyck segment S_y
    Segment {
        y: u32,
        /// Print only the first LIMIT terms
        #[arg(long)]
        limit: Option<u64>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// An arithmetic progression of k Dyck numbers
    Ap {
        k: u64,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Prime census of segments S_y for y in [from, to]
    Census {
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
        /// Extra probable-prime rounds beyond the fixed battery
        #[arg(long, default_value_t = 16)]
        rounds: u32,
        /// Seed for the probabilistic rounds (reproducible runs)
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Position and value of the least prime in each column progression
    LeastPrime {
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
        #[arg(long, default_value_t = 16)]
        rounds: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Check the least-prime bound p < d²/2 for each column
    Linnik {
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
        #[arg(long, default_value_t = 16)]
        rounds: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Finite-range verification of the partitions, bijection, or predicate
    Verify {
        #[arg(long, value_enum)]
        what: VerifyWhat,
        #[arg(long)]
        bound: u64,
    },
    /// Cross-check generated sequences against OEIS b-files
    Oeis {
        #[arg(long, value_enum)]
        check: OeisCheck,
        #[arg(long, value_enum, default_value = "cache-only")]
        mode: FetchModeArg,
        /// Value bound for the membership checks
        #[arg(long, default_value_t = 65536)]
        bound: u64,
        /// Terms compared per identified chain
        #[arg(long, default_value_t = 15)]
        terms: u32,
    },
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = commands::run(cli.command) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
