//! `solvlat`: Betti numbers, LCS checks and lattice data for almost abelian
//! Lie algebras.
//!
//! Exit codes: 0 success, 2 parse or usage error, 3 precondition failure,
//! 4 mathematical mismatch (the result document is still written).

mod builtins;
mod commands;
mod document;
mod error;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{Format, Method, Report, SearchFlags, Source};
use error::CliError;

#[derive(Parser, Debug)]
#[command(name = "solvlat", version, about)]
struct Cli {
    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Betti numbers (de Rham, or adapted with --adapted).
    Betti {
        #[command(flatten)]
        source: Source,
        /// Twisted cohomology with the document's theta.
        #[arg(long)]
        adapted: bool,
        #[arg(long, value_enum, default_value = "direct")]
        method: Method,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Verify and classify every built-in 4-dimensional LCS structure.
    Table1 {
        /// Omit the forms from the output.
        #[arg(long)]
        verify_only: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Discriminant region and lattice parameters h_k in dimension 4.
    Lattice4d {
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(i64).range(1..=1000))]
        bound: i64,
        #[arg(long, default_value_t = -3, allow_hyphen_values = true)]
        k_min: i64,
        #[arg(long, default_value_t = 3, allow_hyphen_values = true)]
        k_max: i64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Integer char poly, companion matrix and certificate for the
    /// diagonal family in dimension 2n+2.
    LatticeBuild {
        #[arg(long, value_parser = clap::value_parser!(u16).range(2..=64))]
        n: u16,
        #[arg(long, value_parser = clap::value_parser!(i64).range(3..))]
        m: i64,
    },
    /// Verify a given (omega, theta), solve for the Lee form, or search.
    Check {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        flags: SearchFlags,
    },
    /// Exhaustive scan for the root lemma.
    RaicesScan {
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u16).range(1..=8))]
        n: u16,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(i64).range(0..=20))]
        bound: i64,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Char-poly integrality scan along the unimodular LCK family.
    NolatticeScan {
        #[arg(long, default_value = "1")]
        mu: String,
        /// Comma-separated rotation angles; repeat for several families.
        #[arg(long = "angles", default_values_t = commands::DEFAULT_ANGLES.map(String::from))]
        angles: Vec<String>,
        #[arg(long, default_value_t = 1e-3)]
        step: f64,
        #[arg(long, default_value_t = 5.0)]
        t_max: f64,
        #[arg(long, default_value_t = 1e-3)]
        floor: f64,
    },
    /// Print every built-in dataset as an algebra document.
    DumpBuiltins,
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("SOLVLAT_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Parse(format!("SOLVLAT_THREADS must be a positive integer, got `{v}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Precondition(e.to_string()))
}

fn dispatch(cmd: &Command) -> Result<Report, CliError> {
    match cmd {
        Command::Betti {
            source,
            adapted,
            method,
            format,
        } => commands::betti(source, *adapted, *method, *format),
        Command::Table1 { verify_only, format } => commands::table1(*verify_only, *format),
        Command::Lattice4d {
            bound,
            k_min,
            k_max,
            format,
        } => commands::lattice4d(*bound, *k_min, *k_max, *format),
        Command::LatticeBuild { n, m } => commands::lattice_build(*n as usize, *m),
        Command::Check { source, flags } => commands::check(source, flags),
        Command::RaicesScan { n, bound, tol } => {
            if !(*tol > 0.0) {
                return Err(CliError::Parse("--tol must be positive".into()));
            }
            commands::raices_scan(*n as usize, *bound, *tol)
        }
        Command::NolatticeScan {
            mu,
            angles,
            step,
            t_max,
            floor,
        } => {
            if !(*step > 0.0 && *t_max >= *step) {
                return Err(CliError::Parse("need 0 < --step ≤ --t-max".into()));
            }
            commands::nolattice(mu, angles, *step, *t_max, *floor)
        }
        Command::DumpBuiltins => Ok(commands::dump_builtins()),
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.output {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Precondition(format!("{}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::Precondition(e.to_string()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads()
        .and_then(|_| dispatch(&cli.command))
        .and_then(|r| emit(&cli, &r.text).map(|_| r.mismatch));
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(4),
        Err(e) => {
            eprintln!("solvlat: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
