//! Command-line front end: `table`, `series` and `verify`.
//!
//! All output goes to the supplied writer (standard output in the binary);
//! timing and diagnostics go to standard error. Exit codes: 0 success,
//! 1 verification failure, 2 usage error.

pub mod render;
pub mod verify;

use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::combinatorics::PyramidalTable;
use crate::poincare::{betti_unordered, ordered_series, poincare_ordered, unordered_series};
use crate::ring::TruncSeries;
use crate::virtual_poincare::{getzler_series_raw, virtual_ordered, virtual_ordered_series, virtual_unordered, virtual_unordered_series};
use crate::Space;

pub use render::{OutputFormat, PolyRow};
pub use verify::{
    run_verify, Family, Formulas, LibraryFormulas, MutatedFormulas, Mutation, Ranges, Suite, VerifySummary,
};

pub const MAX_K: u32 = 32;
pub const MAX_N: usize = 64;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "confspace", version, about = "Poincaré polynomials of configuration spaces of the punctured plane")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a table of pyramidal numbers or Poincaré polynomials.
    Table(TableArgs),
    /// Print the coefficients of a generating series, one per line.
    Series(SeriesArgs),
    /// Run verification suites; exits 1 if any check fails.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(subcommand)]
    pub subject: TableSubject,
}

#[derive(Debug, Subcommand)]
pub enum TableSubject {
    /// Pyramidal numbers P(k, i) for -1 <= k <= max-k, 0 <= i <= max-i.
    Pyramidal {
        #[arg(long, allow_negative_numbers = true, value_parser = clap::value_parser!(i64).range(-1..=MAX_K as i64))]
        max_k: i64,
        #[arg(long, value_parser = parse_n)]
        max_i: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Standard or virtual Poincaré polynomials for n = 0..=max-n.
    Betti {
        #[arg(long, value_enum, default_value_t = SpaceArg::Unordered)]
        space: SpaceArg,
        #[arg(long, value_enum, default_value_t = Kind::Standard)]
        kind: Kind,
        #[arg(short = 'k', value_parser = parse_k)]
        k: u32,
        #[arg(long, value_parser = parse_n)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SpaceArg {
    Ordered,
    Unordered,
}

impl From<SpaceArg> for Space {
    fn from(s: SpaceArg) -> Space {
        match s {
            SpaceArg::Ordered => Space::Ordered,
            SpaceArg::Unordered => Space::Unordered,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SpaceSelection {
    Ordered,
    Unordered,
    Both,
}

impl SpaceSelection {
    fn spaces(self) -> Vec<Space> {
        match self {
            SpaceSelection::Ordered => vec![Space::Ordered],
            SpaceSelection::Unordered => vec![Space::Unordered],
            SpaceSelection::Both => Space::BOTH.to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Standard,
    Virtual,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesFamily {
    /// (1 + x y^2) / ((1 - y)(1 - x y)^k)
    StandardUnordered,
    /// sum_n P(F_n) y^n
    StandardOrdered,
    /// (1 - x^2 y^2) / ((1 - x^2 y)(1 + y)^k)
    VirtualUnordered,
    /// (1 - x^2 y^2)(1 - y)^k / ((1 - x^2 y)(1 - y^2)^k)
    VirtualUnorderedRaw,
    /// sum_n S(F_n) y^n
    VirtualOrdered,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub family: SeriesFamily,
    #[arg(short = 'k', value_parser = parse_k)]
    pub k: u32,
    #[arg(long, value_parser = parse_n)]
    pub order: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite to run (same as --suite).
    #[arg(value_enum, conflicts_with = "suite")]
    pub suite_name: Option<Suite>,
    #[arg(long, value_enum)]
    pub suite: Option<Suite>,
    /// Only this puncture count.
    #[arg(short = 'k', value_parser = parse_k)]
    pub k: Option<u32>,
    #[arg(long, value_parser = parse_k, conflicts_with = "k")]
    pub max_k: Option<u32>,
    #[arg(long, value_parser = parse_n)]
    pub max_n: Option<usize>,
    #[arg(long, value_enum, default_value_t = SpaceSelection::Both)]
    pub space: SpaceSelection,
    /// Comma-separated primes for the point-count suite.
    #[arg(long, value_delimiter = ',', value_parser = parse_prime)]
    pub primes: Option<Vec<u32>>,
    /// Print per-item lines for every suite.
    #[arg(long)]
    pub verbose: bool,
    /// Corrupt one coefficient, `family:k:n:exponent:delta` (for testing the suites).
    #[arg(long, hide = true)]
    pub inject: Option<Mutation>,
}

fn parse_k(s: &str) -> Result<u32, String> {
    let k: u32 = s.parse().map_err(|e| format!("{e}"))?;
    if k > MAX_K {
        return Err(format!("must be at most {MAX_K}"));
    }
    Ok(k)
}

fn parse_n(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|e| format!("{e}"))?;
    if n > MAX_N {
        return Err(format!("must be at most {MAX_N}"));
    }
    Ok(n)
}

fn parse_prime(s: &str) -> Result<u32, String> {
    let q: u32 = s.parse().map_err(|e| format!("{e}"))?;
    crate::ffield::PrimeField::new(q).map_err(|e| e.to_string())?;
    Ok(q)
}

/// Rows of `table betti`.
pub fn betti_rows(space: Space, kind: Kind, k: u32, max_n: usize) -> Vec<PolyRow> {
    (0..=max_n)
        .map(|n| match (kind, space) {
            (Kind::Standard, Space::Unordered) => PolyRow::new(k, n, &betti_unordered(k, n).to_poly(), true),
            (Kind::Standard, Space::Ordered) => PolyRow::new(k, n, &poincare_ordered(k, n), true),
            (Kind::Virtual, Space::Unordered) => PolyRow::new(k, n, &virtual_unordered(k, n).poly, false),
            (Kind::Virtual, Space::Ordered) => PolyRow::new(k, n, &virtual_ordered(k, n).poly, false),
        })
        .collect()
}

pub fn series_for(family: SeriesFamily, k: u32, order: usize) -> TruncSeries {
    match family {
        SeriesFamily::StandardUnordered => unordered_series(k, order),
        SeriesFamily::StandardOrdered => ordered_series(k, order),
        SeriesFamily::VirtualUnordered => virtual_unordered_series(k, order),
        SeriesFamily::VirtualUnorderedRaw => getzler_series_raw(k, order),
        SeriesFamily::VirtualOrdered => virtual_ordered_series(k, order),
    }
}

pub fn cmd_table(args: &TableArgs) -> String {
    match &args.subject {
        TableSubject::Pyramidal { max_k, max_i, format } => {
            let table = PyramidalTable::new(*max_k, *max_i).expect("max_k >= -1 checked by parser");
            render::render_pyramidal(&table, *format)
        }
        TableSubject::Betti { space, kind, k, max_n, format } => {
            render::render_poly_rows(&betti_rows((*space).into(), *kind, *k, *max_n), *format)
        }
    }
}

pub fn cmd_series(args: &SeriesArgs) -> String {
    render::render_series(&series_for(args.family, args.k, args.order))
}

pub fn cmd_verify(args: &VerifyArgs) -> crate::Result<VerifySummary> {
    let suite = args.suite.or(args.suite_name).unwrap_or(Suite::All);
    let ranges = Ranges {
        k: args.k,
        max_k: args.max_k,
        max_n: args.max_n,
        spaces: Some(args.space.spaces()),
        primes: args.primes.clone(),
    };
    match &args.inject {
        Some(m) => run_verify(suite, &ranges, &MutatedFormulas { inner: LibraryFormulas, mutation: m.clone() }),
        None => run_verify(suite, &ranges, &LibraryFormulas),
    }
}

/// Runs a parsed command, writing results to `out`; returns the exit code.
pub fn run(cli: &Cli, out: &mut impl Write) -> io::Result<i32> {
    match &cli.command {
        Command::Table(args) => {
            out.write_all(cmd_table(args).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Series(args) => {
            out.write_all(cmd_series(args).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Verify(args) => {
            let summary = match cmd_verify(args) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(EXIT_USAGE);
                }
            };
            let verbose = args.verbose || matches!(args.suite.or(args.suite_name), Some(Suite::Duality | Suite::Pointcount));
            out.write_all(verify::render_summary(&summary, verbose).as_bytes())?;
            eprintln!("verified in {:.3}s", summary.duration.as_secs_f64());
            Ok(if summary.passed() { EXIT_OK } else { EXIT_FAILED })
        }
    }
}
