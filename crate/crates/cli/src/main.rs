//! `zassenhaus`: class-size tables, divisibility graphs, sweeps and
//! brute-force verification for PSL(2,q) and Sz(q).
//!
//! Exit status: 0 on success, 1 when a requested verification fails, 2 on
//! usage errors (bad arguments, unsupported q).

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use zassenhaus_core::numtheory::parse_q;
use zassenhaus_core::Family;

use commands::{CliError, Report};

/// Set to `1` to allow brute-force enumeration of Sz(32).
pub const ALLOW_SZ32_ENV: &str = "ZASSENHAUS_ALLOW_SZ32";

#[derive(Debug, Parser)]
#[command(name = "zassenhaus", version, about = "Conjugacy class sizes and divisibility graphs of PSL(2,q) and Sz(q)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Psl2,
    Sz,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Psl2 => Family::Psl2,
            FamilyArg::Sz => Family::Sz,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
    Shape,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, ValueEnum)]
pub enum Check {
    ClassEquation,
    BruteForce,
    TiLemma,
    Centralizers,
}

fn q_arg(s: &str) -> Result<u64, String> {
    parse_q(s).map_err(|e| e.to_string())
}

#[derive(Debug, Clone)]
struct SizeList(Vec<u128>);

fn sizes_arg(s: &str) -> Result<SizeList, String> {
    if s.trim().is_empty() {
        return Ok(SizeList(Vec::new()));
    }
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<u128>()
                .map_err(|_| format!("`{}` is not a positive integer", part.trim()))
                .and_then(|v| if v == 0 { Err("class sizes are positive".into()) } else { Ok(v) })
        })
        .collect::<Result<_, _>>()
        .map(SizeList)
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the class-size table of PSL(2,q) or Sz(q).
    Classes {
        family: FamilyArg,
        /// q, either literally or as p^k.
        #[arg(long, value_parser = q_arg)]
        q: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: TableFormat,
    },
    /// Build the divisibility graph of a group's class sizes or of an explicit list.
    Divgraph {
        #[arg(long, value_enum, requires = "q", conflicts_with = "sizes")]
        family: Option<FamilyArg>,
        #[arg(long, value_parser = q_arg, requires = "family")]
        q: Option<u64>,
        /// Comma-separated positive integers.
        #[arg(long, value_parser = sizes_arg, required_unless_present = "family")]
        sizes: Option<SizeList>,
        #[arg(long, value_enum, default_value = "shape")]
        format: GraphFormat,
    },
    /// Run verification checks; brute-force checks need q <= 13 (PSL) or q = 8 (Sz).
    Verify {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, value_parser = q_arg)]
        q: u64,
        /// Comma-separated; defaults to every check supported for q.
        #[arg(long, value_enum, value_delimiter = ',')]
        checks: Vec<Check>,
        /// Directory for the binary group cache.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Tabulate e, |G|, distinct class sizes and graph shape over a range of q.
    Sweep {
        family: FamilyArg,
        #[arg(value_parser = q_arg)]
        q_min: u64,
        #[arg(value_parser = q_arg)]
        q_max: u64,
    },
}

fn run(cli: Cli) -> Result<Report, CliError> {
    match cli.command {
        Command::Classes { family, q, format } => commands::classes(family.into(), q, format),
        Command::Divgraph {
            family,
            q,
            sizes,
            format,
        } => {
            let source = match (family, q, sizes) {
                (Some(family), Some(q), None) => commands::GraphSource::Group(family.into(), q),
                (None, None, Some(SizeList(sizes))) => commands::GraphSource::Sizes(sizes),
                _ => {
                    return Err(CliError::Usage(
                        "give either --family with --q, or --sizes".into(),
                    ))
                }
            };
            commands::divgraph(source, format)
        }
        Command::Verify {
            family,
            q,
            checks,
            cache,
        } => {
            let allow_large = std::env::var(ALLOW_SZ32_ENV).as_deref() == Ok("1");
            commands::verify(family.into(), q, &checks, cache.as_deref(), allow_large)
        }
        Command::Sweep {
            family,
            q_min,
            q_max,
        } => Ok(commands::sweep(family.into(), q_min, q_max)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo: Vec<String> = std::env::args().collect();
    eprintln!("$ {}", echo.join(" "));
    match run(cli) {
        Ok(report) => {
            report.emit();
            ExitCode::from(report.status())
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
