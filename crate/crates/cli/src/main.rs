//! `gaussphi` — compute and cross-check the minimal Euclidean function on
//! the Gaussian integers.
//!
//! Exit codes: 0 success, 1 domain or I/O error, 2 cap exceeded,
//! 3 verification failure. (Usage errors are reported by the parser with
//! its own exit code.)

mod render;

use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use gaussphi::counting;
use gaussphi::error::CapExceeded;
use gaussphi::expansion::{expand_min, expand_min_backtracking};
use gaussphi::motzkin::{self, DEFAULT_ORACLE_CAP};
use gaussphi::phi::phi;
use gaussphi::region::{
    enumerate_region, in_region, preimage, RegionKind, RegionQuery, DEFAULT_ENUM_CAP,
};
use gaussphi::strategies::{RecursiveBuilder, NAIVE_CAP, RECURSIVE_CAP};
use gaussphi::GaussInt;

/// Default refusal level for figure rendering.
const DEFAULT_RENDER_CAP: u32 = 12;

#[derive(Parser)]
#[command(
    name = "gaussphi",
    version,
    about = "Minimal Euclidean function on the Gaussian integers: \
             closed formula, set enumeration, digit expansions, and a \
             brute-force verifier"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print phi(re + im*i).
    #[command(allow_negative_numbers = true)]
    Phi { re: i64, im: i64 },
    /// Print the canonical minimal (1+i)-ary expansion, digit 0 first.
    #[command(allow_negative_numbers = true)]
    Expand {
        re: i64,
        im: i64,
        /// Use the exhaustive backtracking constructor instead of the
        /// greedy one (slow; intended for debugging).
        #[arg(long)]
        backtrack: bool,
    },
    /// Print whether re + im*i lies in the given set.
    #[command(allow_negative_numbers = true)]
    Member {
        #[arg(value_parser = parse_kind)]
        kind: RegionKind,
        level: u32,
        re: i64,
        im: i64,
    },
    /// Write every element of a set as JSON lines, sorted by (re, im).
    Enumerate {
        #[arg(value_parser = parse_kind)]
        kind: RegionKind,
        level: u32,
        /// Output path; `-` is stdout.
        out: Option<String>,
        #[arg(long = "out", value_name = "PATH")]
        out_flag: Option<String>,
        #[arg(long, default_value_t = DEFAULT_ENUM_CAP)]
        cap: u32,
    },
    /// Write every element with phi equal to the level, as JSON lines.
    Preimage {
        level: u32,
        /// Output path; `-` is stdout.
        out: Option<String>,
        #[arg(long = "out", value_name = "PATH")]
        out_flag: Option<String>,
        #[arg(long, default_value_t = DEFAULT_ENUM_CAP)]
        cap: u32,
    },
    /// Print a closed-form cardinality.
    Count {
        #[arg(value_enum, ignore_case = true)]
        kind: CountKind,
        level: u32,
    },
    /// Write the cardinality table for levels 0..=n_max as CSV.
    Table {
        n_max: u32,
        /// Output path; `-` is stdout.
        out: Option<String>,
        #[arg(long = "out", value_name = "PATH")]
        out_flag: Option<String>,
    },
    /// Build the Motzkin sets by brute force and check them against the
    /// set enumeration, level by level.
    VerifyLenstra {
        n_max: u32,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        cap: u32,
    },
    /// Time the naive, recursive, and closed-form counting strategies and
    /// write the results as CSV.
    Bench {
        n_max: u32,
        /// Output path; `-` is stdout.
        out: Option<String>,
        #[arg(long = "out", value_name = "PATH")]
        out_flag: Option<String>,
        /// Lower the per-strategy level ceilings (naive 8, recursive 20).
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Render a set as a figure file.
    Render {
        #[arg(value_parser = parse_kind)]
        kind: RegionKind,
        level: u32,
        /// Output path; `-` is stdout.
        out: Option<String>,
        #[arg(long = "out", value_name = "PATH")]
        out_flag: Option<String>,
        #[arg(long, value_enum, ignore_case = true, default_value_t = Format::Svg)]
        format: Format,
        /// Cell size in pixels (SVG only).
        #[arg(long, default_value_t = 16)]
        cell_px: u32,
        #[arg(long, default_value_t = DEFAULT_RENDER_CAP)]
        cap: u32,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum CountKind {
    S,
    B,
    Preimage,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Svg,
    Pgm,
}

fn parse_kind(s: &str) -> Result<RegionKind, String> {
    match s.to_ascii_lowercase().as_str() {
        "oct" => Ok(RegionKind::Oct),
        "s" => Ok(RegionKind::S),
        "d" => Ok(RegionKind::D),
        "b" => Ok(RegionKind::B),
        _ => Err(format!("unknown set kind {s:?}, expected Oct, S, D, or B")),
    }
}

enum CmdError {
    Domain(String),
    Cap(CapExceeded),
    Verification(String),
    Io(io::Error),
}

impl CmdError {
    fn code(&self) -> u8 {
        match self {
            CmdError::Domain(_) | CmdError::Io(_) => 1,
            CmdError::Cap(_) => 2,
            CmdError::Verification(_) => 3,
        }
    }
}

impl fmt::Display for CmdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CmdError::Domain(msg) => write!(f, "{msg}"),
            CmdError::Cap(e) => write!(f, "{e} (raise --cap to override)"),
            CmdError::Verification(msg) => write!(f, "{msg}"),
            CmdError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<CapExceeded> for CmdError {
    fn from(e: CapExceeded) -> Self {
        CmdError::Cap(e)
    }
}

impl From<io::Error> for CmdError {
    fn from(e: io::Error) -> Self {
        CmdError::Io(e)
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CmdError> {
    match cli.command {
        Command::Phi { re, im } => {
            let x = nonzero(re, im, "phi undefined at 0")?;
            println!("{}", phi(x));
        }
        Command::Expand { re, im, backtrack } => {
            let x = nonzero(re, im, "expansion undefined at 0")?;
            let e = if backtrack {
                expand_min_backtracking(x)
            } else {
                expand_min(x)
            };
            println!("{e}");
        }
        Command::Member {
            kind,
            level,
            re,
            im,
        } => {
            println!(
                "{}",
                in_region(RegionQuery::new(kind, level), GaussInt::new(re, im))
            );
        }
        Command::Enumerate {
            kind,
            level,
            out,
            out_flag,
            cap,
        } => {
            let set = enumerate_region(RegionQuery::new(kind, level), cap)?;
            let mut w = open_out(&resolve_out(out, out_flag))?;
            write_jsonl(&set.elements, &mut w)?;
            w.flush()?;
        }
        Command::Preimage {
            level,
            out,
            out_flag,
            cap,
        } => {
            let elements = preimage(level, cap)?;
            let mut w = open_out(&resolve_out(out, out_flag))?;
            write_jsonl(&elements, &mut w)?;
            w.flush()?;
        }
        Command::Count { kind, level } => {
            let n = match kind {
                CountKind::S => counting::s_size(level),
                CountKind::B => counting::b_size(level),
                CountKind::Preimage => counting::preimage_size(level),
            };
            println!("{n}");
        }
        Command::Table {
            n_max,
            out,
            out_flag,
        } => {
            let mut w = open_out(&resolve_out(out, out_flag))?;
            counting::write_csv(&counting::table(n_max), &mut w)?;
            w.flush()?;
        }
        Command::VerifyLenstra { n_max, cap } => {
            let checks = motzkin::verify_lenstra(n_max, cap)?;
            let mut ok = true;
            for c in &checks {
                println!(
                    "level {}: oracle {}, region {}, {}",
                    c.level,
                    c.oracle_size,
                    c.region_size,
                    if c.matches { "PASS" } else { "FAIL" }
                );
                ok &= c.matches;
            }
            if ok {
                println!("verify-lenstra: PASS (levels 0..={n_max})");
            } else {
                println!("verify-lenstra: FAIL");
                return Err(CmdError::Verification(
                    "oracle and region enumeration disagree".into(),
                ));
            }
        }
        Command::Bench {
            n_max,
            out,
            out_flag,
            cap,
        } => {
            let mut w = open_out(&resolve_out(out, out_flag))?;
            run_bench(n_max, cap, &mut w)?;
            w.flush()?;
        }
        Command::Render {
            kind,
            level,
            out,
            out_flag,
            format,
            cell_px,
            cap,
        } => {
            let set = enumerate_region(RegionQuery::new(kind, level), cap)?;
            let bytes = match format {
                Format::Svg => render::render_svg(&set, cell_px.max(1)).into_bytes(),
                Format::Pgm => render::render_pgm(&set),
            };
            let mut w = open_out(&resolve_out(out, out_flag))?;
            w.write_all(&bytes)?;
            w.flush()?;
        }
    }
    Ok(())
}

fn nonzero(re: i64, im: i64, msg: &str) -> Result<GaussInt, CmdError> {
    if re == 0 && im == 0 {
        Err(CmdError::Domain(msg.to_owned()))
    } else {
        Ok(GaussInt::new(re, im))
    }
}

fn resolve_out(positional: Option<String>, flag: Option<String>) -> String {
    flag.or(positional).unwrap_or_else(|| "-".to_owned())
}

fn open_out(path: &str) -> io::Result<Box<dyn Write>> {
    if path == "-" {
        Ok(Box::new(BufWriter::new(io::stdout().lock())))
    } else {
        Ok(Box::new(BufWriter::new(File::create(path)?)))
    }
}

fn write_jsonl<W: Write>(elements: &[GaussInt], out: &mut W) -> io::Result<()> {
    for x in elements {
        writeln!(out, "{{\"re\":{},\"im\":{}}}", x.re, x.im)?;
    }
    Ok(())
}

/// Runs the three counting strategies up to their ceilings and writes one
/// CSV row per (level, strategy), plus a trailing comment describing the
/// search space the naive strategy would face at the next level.
fn run_bench<W: Write>(n_max: u32, cap: Option<u32>, out: &mut W) -> Result<(), CmdError> {
    let naive_max = n_max.min(NAIVE_CAP).min(cap.unwrap_or(u32::MAX));
    let recursive_max = n_max.min(RECURSIVE_CAP).min(cap.unwrap_or(u32::MAX));

    // (level, strategy rank, name, seconds, count)
    let mut rows: Vec<(u32, u8, &str, f64, u128)> = Vec::new();

    let start = Instant::now();
    let mut level = motzkin::build_levels(0, 0)
        .expect("level 0 is never capped")
        .remove(0);
    rows.push((
        0,
        0,
        "naive",
        start.elapsed().as_secs_f64(),
        level.elements.len() as u128,
    ));
    for n in 1..=naive_max {
        let start = Instant::now();
        let (next, _) = motzkin::grow_level(&level);
        let dt = start.elapsed().as_secs_f64();
        rows.push((
            n,
            0,
            "naive",
            dt,
            (next.elements.len() - level.elements.len()) as u128,
        ));
        level = next;
    }
    let frontier = motzkin::candidate_stats(&level);
    let frontier_bound = level.elements.len();

    let start = Instant::now();
    let mut builder = RecursiveBuilder::new();
    rows.push((
        0,
        1,
        "recursive",
        start.elapsed().as_secs_f64(),
        builder.elements().len() as u128,
    ));
    for n in 1..=recursive_max {
        let start = Instant::now();
        let added = builder.advance();
        rows.push((
            n,
            1,
            "recursive",
            start.elapsed().as_secs_f64(),
            added as u128,
        ));
    }

    for n in 0..=n_max {
        let start = Instant::now();
        let count = counting::preimage_size(n);
        rows.push((n, 2, "formula", start.elapsed().as_secs_f64(), count));
    }

    rows.sort_by_key(|r| (r.0, r.1));

    writeln!(out, "n,strategy,wall_time,result")?;
    for (n, _, name, secs, count) in &rows {
        writeln!(out, "{n},{name},{secs:.9},{count}")?;
    }
    writeln!(
        out,
        "# naive candidate space for level {}: {} octant points of norm <= {}, \
         {} already members, {} to examine, {} cosets to check",
        frontier.level,
        frontier.octant_points,
        frontier_bound,
        frontier.already_members,
        frontier.examined,
        frontier.cosets_checked
    )?;

    // Strategies must agree wherever they overlap.
    for n in 0..=n_max {
        let counts: Vec<u128> = rows.iter().filter(|r| r.0 == n).map(|r| r.4).collect();
        if counts.windows(2).any(|p| p[0] != p[1]) {
            return Err(CmdError::Verification(format!(
                "strategies disagree at n = {n}: {counts:?}"
            )));
        }
    }
    Ok(())
}
