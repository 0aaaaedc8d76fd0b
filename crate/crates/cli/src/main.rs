//! carpetcalc: exact cohomology, Hilbert-scheme tangent data, Picard-lattice
//! verdicts, and intersection-ring identities for K3 carpets on rational
//! normal scrolls.
//!
//! Exit codes: 0 on success, 2 on a usage or parameter error, 3 when an
//! internal cross-check fails (two independent routes to the same quantity
//! disagree). Set `CARPETCALC_NO_COLOR` to disable ANSI styling.

mod commands;
mod output;
mod render;

use std::fmt;
use std::fs;
use std::io::{IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use carpetcalc_core::LatticeModel;
use output::Report;
use render::Style;

#[derive(Parser)]
#[command(
    name = "carpetcalc",
    version,
    about = "Exact invariants of K3 carpets on rational normal scrolls",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; `tsv` is available for `sweep` only
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report to PATH instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Cohomology of a line bundle on the Hirzebruch surface F_n
    Cohomology {
        /// Surface index n (the ruled surface F_n)
        #[arg(value_parser = clap::value_parser!(i64).range(0..=100_000))]
        n: i64,
        /// Coefficient of the negative section (self-intersection -n)
        #[arg(value_parser = clap::value_parser!(i64).range(-1_000_000..=1_000_000), allow_hyphen_values = true)]
        x: i64,
        /// Coefficient of the ruling fiber
        #[arg(value_parser = clap::value_parser!(i64).range(-1_000_000..=1_000_000), allow_hyphen_values = true)]
        y: i64,
    },
    /// Invariants and Hilbert-scheme data of the K3 carpet on S(a, b)
    Carpet {
        /// Larger scroll degree (requires a >= b)
        #[arg(value_parser = clap::value_parser!(i64).range(1..=1_000_000))]
        a: i64,
        /// Smaller scroll degree
        #[arg(value_parser = clap::value_parser!(i64).range(1..=1_000_000))]
        b: i64,
    },
    /// Smoothness table over every scroll with 1 <= b <= a <= a_max
    Sweep {
        /// Upper bound on the scroll degree a
        #[arg(value_parser = clap::value_parser!(i64).range(1..=300))]
        a_max: i64,
    },
    /// Intersection ring of the join-threefold resolution for bundle degrees (n0, nprime)
    Join {
        /// Degree of the first summand along the first ruling
        #[arg(value_parser = clap::value_parser!(i64).range(1..=1_000_000))]
        n0: i64,
        /// Degree of the second summand along the second ruling
        #[arg(value_parser = clap::value_parser!(i64).range(1..=1_000_000))]
        nprime: i64,
    },
    /// Picard-lattice model of a polarized hyperelliptic K3 family member
    Lattice {
        /// Lattice family
        #[arg(value_enum)]
        model: ModelArg,
        /// Family parameter n
        #[arg(value_parser = clap::value_parser!(i64).range(1..=1_000_000_000))]
        n: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    /// Double cover of a smooth quadric
    #[value(name = "F0", alias = "f0")]
    F0,
    /// Double cover of the plane blown up in a point
    #[value(name = "F1", alias = "f1")]
    F1,
    /// Double cover of the index-4 ruled surface
    #[value(name = "F4", alias = "f4")]
    F4,
}

impl From<ModelArg> for LatticeModel {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::F0 => LatticeModel::F0,
            ModelArg::F1 => LatticeModel::F1,
            ModelArg::F4 => LatticeModel::F4,
        }
    }
}

enum CliError {
    Usage(String),
    Domain(carpetcalc_core::Error),
    Io(std::io::Error),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Domain(e) => {
                if e.is_internal() {
                    3
                } else {
                    2
                }
            }
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<carpetcalc_core::Error> for CliError {
    fn from(e: carpetcalc_core::Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.code())
        }
    }
}

fn color_enabled(cli: &Cli) -> bool {
    cli.format == Format::Text
        && cli.out.is_none()
        && std::env::var_os("CARPETCALC_NO_COLOR").is_none_or(|v| v.is_empty())
        && std::io::stdout().is_terminal()
}

fn run(cli: Cli) -> Result<(), CliError> {
    let style = Style {
        color: color_enabled(&cli),
    };
    let report = build_report(&cli.command, &style)?;
    let payload = match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.json)
                .expect("report documents are valid JSON");
            s.push('\n');
            s
        }
        Format::Text => report.text,
        Format::Tsv => report.tsv.ok_or_else(|| {
            CliError::Usage("tsv output is only available for the sweep command".to_string())
        })?,
    };
    match &cli.out {
        Some(path) => fs::write(path, payload)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(payload.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn build_report(command: &Command, style: &Style) -> Result<Report, CliError> {
    let report = match *command {
        Command::Cohomology { n, x, y } => commands::cohomology(n, x, y, style)?,
        Command::Carpet { a, b } => {
            if a < b {
                return Err(CliError::Usage(format!(
                    "carpet requires a >= b >= 1, got a = {a}, b = {b}"
                )));
            }
            commands::carpet(a, b, style)?
        }
        Command::Sweep { a_max } => commands::sweep(a_max, style)?,
        Command::Join { n0, nprime } => commands::join(n0, nprime, style)?,
        Command::Lattice { model, n } => commands::lattice(model.into(), n, style)?,
    };
    Ok(report)
}
