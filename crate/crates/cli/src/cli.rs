//! Argument parsing and the subcommands.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand, ValueEnum};
use paradromic_core::linkrel::{paradrome_relations, DEFAULT_ENUMERATION_BUDGET};
use paradromic_core::paradrome::{
    classify_with_limit, pattern_charpoly_closed_form, torus_det, transfer_s, DEFAULT_EXACT_ARC_LIMIT,
};
use paradromic_core::{is_prime, IntPoly};
use rayon::prelude::*;

use crate::record::{self, OutputRecord};
use crate::relations;
use crate::verify::{self, VerifyConfig};

pub const SUCCESS: i32 = 0;
pub const FAILURE: i32 = 1;
pub const USAGE: i32 = 2;

/// Largest number of cells `table` will compute.
pub const MAX_TABLE_CELLS: u64 = 10_000;

#[derive(Debug, Parser)]
#[command(name = "paradromic", version, about = "Fox colorings and determinants of paradromic rings and torus links")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct Cell {
    /// Number of half twists.
    #[arg(long)]
    m: u64,
    /// Number of strips, at least 1.
    #[arg(long)]
    n: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Topological type, colorability class and determinant of P(m,n).
    Classify {
        #[command(flatten)]
        cell: Cell,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Largest diagram (in arcs) whose determinant is computed exactly.
        #[arg(long, default_value_t = DEFAULT_EXACT_ARC_LIMIT)]
        budget: u64,
    },
    /// Classify every P(m,n) over inclusive ranges such as `0..10`.
    Table {
        #[arg(long, value_parser = parse_range)]
        m: RangeInclusive<u64>,
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<u64>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_EXACT_ARC_LIMIT)]
        budget: u64,
    },
    /// A non-constant coloring of the diagram of P(m,n) mod p, or `none`.
    Color {
        #[command(flatten)]
        cell: Cell,
        #[arg(long)]
        p: u64,
    },
    /// Characteristic polynomial of the odd-width transfer matrix.
    Charpoly {
        #[arg(long)]
        n: usize,
    },
    /// Run the cross-check suite.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_m: usize,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, value_delimiter = ',', default_value = "2,3,5,7")]
        primes: Vec<u64>,
        /// Cap on p^(arcs + circles) for brute-force enumeration.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        budget: u64,
    },
    /// Dump the crossing relations of the diagram of P(m,n).
    Relations {
        #[command(flatten)]
        cell: Cell,
    },
    /// Determinant of a torus link (closed form) or of a paradromic ring (diagram).
    Det(DetArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct DetArgs {
    #[arg(long, num_args = 2, value_names = ["U", "V"])]
    torus: Option<Vec<u64>>,
    #[arg(long, num_args = 2, value_names = ["M", "N"])]
    paradrome: Option<Vec<u64>>,
}

fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b),
        None => (s, s),
    };
    let lo: u64 = a.trim().parse().map_err(|_| format!("bad range start `{}`", a))?;
    let hi: u64 = b.trim().parse().map_err(|_| format!("bad range end `{}`", b))?;
    if lo > hi {
        return Err(format!("empty range {}..{}", lo, hi));
    }
    Ok(lo..=hi)
}

/// Parses `args` (program name first) and runs the chosen command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { SUCCESS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {}", msg);
            USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {}", e);
            FAILURE
        }
    }
}

enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<paradromic_core::Error> for Failure {
    fn from(e: paradromic_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn to_usize(x: u64) -> Result<usize, Failure> {
    usize::try_from(x).map_err(|_| usage(format!("{} is too large", x)))
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Classify { cell, format, budget } => {
            let c = classify_with_limit(cell.m, cell.n, budget)?;
            write_records(out, &[OutputRecord::new(cell.m, cell.n, &c)], format)?;
        }
        Command::Table { m, n, format, budget } => {
            let cells = (m.end() - m.start() + 1).saturating_mul(n.end() - n.start() + 1);
            if cells > MAX_TABLE_CELLS {
                return Err(usage(format!("{} cells requested, at most {} allowed", cells, MAX_TABLE_CELLS)));
            }
            let grid: Vec<(u64, u64)> = n.flat_map(|n| m.clone().map(move |m| (m, n))).collect();
            let records = grid
                .par_iter()
                .map(|&(m, n)| classify_with_limit(m, n, budget).map(|c| OutputRecord::new(m, n, &c)))
                .collect::<Result<Vec<_>, _>>()?;
            write_records(out, &records, format)?;
        }
        Command::Color { cell, p } => {
            if !is_prime(p) {
                return Err(usage(format!("{} is not prime", p)));
            }
            let sys = paradrome_relations(to_usize(cell.m)?, to_usize(cell.n)?)?;
            match sys.find_coloring(p)? {
                None => writeln!(out, "none")?,
                Some(v) => {
                    let (arcs, circles) = v.coords().split_at(sys.arc_count());
                    for (i, c) in arcs.iter().enumerate() {
                        writeln!(out, "arc {}: {}", i, c)?;
                    }
                    for (i, c) in circles.iter().enumerate() {
                        writeln!(out, "circle {}: {}", i, c)?;
                    }
                }
            }
        }
        Command::Charpoly { n } => return charpoly(n, out),
        Command::Verify { max_m, max_n, primes, budget } => {
            if primes.is_empty() {
                return Err(usage("no primes given"));
            }
            if let Some(&q) = primes.iter().find(|&&q| !is_prime(q)) {
                return Err(usage(format!("{} is not prime", q)));
            }
            let cfg = VerifyConfig { max_m, max_n, primes, budget, ..VerifyConfig::default() };
            return Ok(run_verify(&cfg, out));
        }
        Command::Relations { cell } => {
            let sys = paradrome_relations(to_usize(cell.m)?, to_usize(cell.n)?)?;
            out.write_all(relations::to_text(&sys).as_bytes())?;
        }
        Command::Det(DetArgs { torus, paradrome }) => {
            let d = match (torus.as_deref(), paradrome.as_deref()) {
                (Some(&[u, v]), _) => torus_det(u, v)?,
                (_, Some(&[m, n])) => paradrome_relations(to_usize(m)?, to_usize(n)?)?.link_determinant(),
                _ => return Err(usage("give --torus U V or --paradrome M N")),
            };
            writeln!(out, "{}", d)?;
        }
    }
    Ok(SUCCESS)
}

fn write_records(out: &mut dyn Write, records: &[OutputRecord], format: Format) -> Result<(), Failure> {
    match format {
        Format::Json => {
            for r in records {
                writeln!(out, "{}", r.to_json())?;
            }
        }
        Format::Csv => record::write_csv(&mut *out, records).map_err(|e| Failure::Io(e.into()))?,
        Format::Text if records.len() == 1 => out.write_all(records[0].to_text().as_bytes())?,
        Format::Text => record::write_table(&mut *out, records)?,
    }
    Ok(())
}

fn charpoly(n: usize, out: &mut dyn Write) -> Result<i32, Failure> {
    if n < 3 || n % 2 == 0 {
        return Err(usage(format!("n must be odd and at least 3, got {}", n)));
    }
    let actual = IntPoly::char_poly(&transfer_s(n)?)?;
    let expected = pattern_charpoly_closed_form(n)?;
    writeln!(out, "char poly:   {}", actual)?;
    writeln!(out, "closed form: {}", expected)?;
    if actual == expected {
        writeln!(out, "MATCH")?;
        Ok(SUCCESS)
    } else {
        writeln!(out, "MISMATCH")?;
        Ok(FAILURE)
    }
}

/// Runs the verification suite with `cfg`, printing one line per check.
/// Returns [`SUCCESS`] when every check passes and [`FAILURE`] otherwise.
pub fn run_verify(cfg: &VerifyConfig, out: &mut dyn Write) -> i32 {
    let outcomes = verify::run(cfg);
    for o in &outcomes {
        let _ = writeln!(out, "{}", o);
    }
    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    let _ = writeln!(out, "{} of {} checks passed", outcomes.len() - failed, outcomes.len());
    if failed == 0 {
        SUCCESS
    } else {
        FAILURE
    }
}
