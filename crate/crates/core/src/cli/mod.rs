//! The `fibsum` command line.
//!
//! [`run`] takes the catalog and both output streams as arguments, so tests
//! can drive it in-process, including against a corrupted catalog.

pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalog::IdentityDescriptor;
use crate::poly::{check_dattoli, Dattoli, DATTOLI_MAX_N};
use crate::sequences::{fib, fib_oracle, lucas, lucas_oracle, SeqIndex};
use crate::verifier::{verify_all, verify_grid, verify_random, with_jobs, GridSpec, IntRange, RandomSpec, VerifyError};

use report::{parse_range, to_human, to_json, to_tsv, ReportSet};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURES: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Indices timed by `bench`.
pub const BENCH_LADDER: [i64; 3] = [1_000, 10_000, 100_000];

#[derive(Debug, Parser)]
#[command(name = "fibsum", version, about = "Exact verification of binomial Fibonacci and Lucas sum identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Human,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeqName {
    Fib,
    Lucas,
}

fn range_arg(s: &str) -> Result<IntRange, String> {
    parse_range(s).ok_or_else(|| format!("expected lo..hi, got `{s}`"))
}

#[derive(Debug, Subcommand)]
enum Command {
    /// One line per catalog entry: id, family, constraints, anchor.
    List,
    /// Check identities on a grid, or on seeded random samples.
    Verify {
        #[arg(long, conflicts_with = "id")]
        all: bool,
        #[arg(long)]
        id: Option<String>,
        #[arg(long, value_name = "LO..HI", allow_hyphen_values = true, value_parser = range_arg)]
        n: Option<IntRange>,
        #[arg(long, value_name = "LO..HI", allow_hyphen_values = true, value_parser = range_arg)]
        r: Option<IntRange>,
        #[arg(long, value_name = "LO..HI", allow_hyphen_values = true, value_parser = range_arg)]
        s: Option<IntRange>,
        #[arg(long, value_name = "LO..HI", allow_hyphen_values = true, value_parser = range_arg)]
        t: Option<IntRange>,
        /// Switches to random sampling (default seed 1).
        #[arg(long)]
        seed: Option<u64>,
        /// Switches to random sampling (default 500).
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Check a Dattoli polynomial identity for n = 0..=N.
    Poly {
        #[arg(long)]
        id: Dattoli,
        #[arg(long)]
        n_max: u32,
    },
    /// Print F_n or L_n exactly.
    Eval {
        #[arg(long, value_enum)]
        seq: SeqName,
        #[arg(long, allow_hyphen_values = true)]
        index: i64,
    },
    /// Time fast doubling against the iterative oracle.
    Bench,
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, catalog: &[IdentityDescriptor], out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
        Err(e) => {
            let text = e.render().to_string();
            let _ = writeln!(err, "{}", text.lines().next().unwrap_or("usage error"));
            return EXIT_USAGE;
        }
    };
    let result = match cli.command {
        Command::List => cmd_list(catalog, out),
        Command::Verify { all, id, n, r, s, t, seed, samples, format, jobs } => {
            let mut grid = GridSpec::default();
            for (slot, v) in [(&mut grid.n_range, n), (&mut grid.r_range, r), (&mut grid.s_range, s), (&mut grid.t_range, t)] {
                if let Some(v) = v {
                    *slot = v;
                }
            }
            let random = (seed.is_some() || samples.is_some()).then(|| RandomSpec {
                seed: seed.unwrap_or(1),
                samples: samples.unwrap_or(500),
                ..RandomSpec::default()
            });
            let id = if all { None } else { id };
            let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            cmd_verify(catalog, id.as_deref(), grid, random, format, jobs, out)
        }
        Command::Poly { id, n_max } => cmd_poly(id, n_max, out),
        Command::Eval { seq, index } => cmd_eval(seq, index, out),
        Command::Bench => cmd_bench(out),
    };
    match result {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn cmd_list(catalog: &[IdentityDescriptor], out: &mut dyn Write) -> Result<u8, Usage> {
    for d in catalog {
        writeln!(out, "{:<10} {:<8} {:<24} {}", d.id, d.family, d.params.flags(), d.anchor)?;
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    catalog: &[IdentityDescriptor],
    id: Option<&str>,
    grid: GridSpec,
    random: Option<RandomSpec>,
    format: Format,
    jobs: usize,
    out: &mut dyn Write,
) -> Result<u8, Usage> {
    grid.validate()?;
    let selected: Vec<&IdentityDescriptor> = match id {
        Some(id) => vec![catalog
            .iter()
            .find(|d| d.id.eq_ignore_ascii_case(id))
            .ok_or_else(|| Usage(format!("unknown identity id `{id}`")))?],
        None => catalog.iter().collect(),
    };
    let reports = with_jobs(jobs, || -> Result<_, VerifyError> {
        match (random, id) {
            (Some(spec), _) => selected.iter().map(|d| verify_random(d, &spec)).collect(),
            (None, Some(_)) => Ok(selected.iter().map(|d| verify_grid(d, &grid)).collect()),
            (None, None) => verify_all(catalog, &grid, None),
        }
    })?;
    let set = ReportSet::new(reports);
    let text = match format {
        Format::Json => to_json(&set),
        Format::Tsv => to_tsv(&set),
        Format::Human => to_human(&set),
    };
    out.write_all(text.as_bytes())?;
    Ok(if set.total_failures == 0 { EXIT_OK } else { EXIT_FAILURES })
}

fn cmd_poly(which: Dattoli, n_max: u32, out: &mut dyn Write) -> Result<u8, Usage> {
    if n_max > DATTOLI_MAX_N {
        return Err(Usage(format!("--n-max must be at most {DATTOLI_MAX_N}, got {n_max}")));
    }
    let mut code = EXIT_OK;
    for n in 0..=n_max {
        let ok = check_dattoli(which, n)?;
        if !ok {
            code = EXIT_FAILURES;
        }
        writeln!(out, "{which} n={n} {}", if ok { "pass" } else { "fail" })?;
    }
    Ok(code)
}

fn cmd_eval(seq: SeqName, index: i64, out: &mut dyn Write) -> Result<u8, Usage> {
    let n = SeqIndex::new(index)?.get();
    let value = match seq {
        SeqName::Fib => fib(n),
        SeqName::Lucas => lucas(n),
    };
    writeln!(out, "{value}")?;
    Ok(EXIT_OK)
}

fn cmd_bench(out: &mut dyn Write) -> Result<u8, Usage> {
    writeln!(out, "{:>8}  {:>8}  {:>15}  {:>8}  {:>15}", "index", "fib_us", "fib_oracle_us", "lucas_us", "lucas_oracle_us")?;
    for n in BENCH_LADDER {
        let time = |f: &dyn Fn() -> num_bigint::BigInt| {
            let start = Instant::now();
            let v = f();
            (start.elapsed().as_micros(), v)
        };
        let (fast_f, a) = time(&|| fib(n));
        let (slow_f, b) = time(&|| fib_oracle(n).expect("ladder within oracle range"));
        let (fast_l, c) = time(&|| lucas(n));
        let (slow_l, d) = time(&|| lucas_oracle(n).expect("ladder within oracle range"));
        if a != b || c != d {
            return Err(Usage(format!("kernel and oracle disagree at {n}")));
        }
        writeln!(out, "{n:>8}  {fast_f:>8}  {slow_f:>15}  {fast_l:>8}  {slow_l:>15}")?;
    }
    Ok(EXIT_OK)
}
