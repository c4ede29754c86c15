//! Command-line front end for `semifree`.
//!
//! Exit codes: 0 when every check passes, 1 when the input is well formed but
//! fails a constraint, 2 for malformed input or arguments.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use semifree::localization::SearchParams;

pub mod commands;
pub mod input;

use commands::{ReduceSource, Report};
use input::{parse_rational, InputDocument};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] semifree::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) => 2,
            CliError::Core(e) if e.is_input_error() => 2,
            CliError::Core(_) => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    /// JSON on standard output.
    Structured,
}

#[derive(Debug, Parser)]
#[command(
    name = "semifree",
    version,
    about = "Fixed-point constraints for Hamiltonian circle actions"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Highest degree checked or computed (defaults depend on the command).
    #[arg(long, global = true)]
    pub max_degree: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate fixed-point data and run the moment and integrality checks.
    Check { file: PathBuf },
    /// Predicted number of fixed points of each index.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long = "N0", default_value_t = 1)]
        n0: u64,
    },
    /// Alpha basis of the model ring and its restrictions to fixed points.
    Ring {
        #[arg(conflicts_with = "n", required_unless_present = "n")]
        dim: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Forced restriction table and identification of points with subsets.
    Solve { file: PathBuf },
    /// Cohomology of the reduced space at level 0.
    Reduce {
        #[arg(conflicts_with_all = ["n", "c"], required_unless_present_all = ["n", "c"])]
        file: Option<PathBuf>,
        #[arg(long, requires = "c")]
        n: Option<usize>,
        /// Offset of the moment map, `mu(J) = |J| - c`, as an integer or `p/q`.
        #[arg(long, requires = "n")]
        c: Option<String>,
    },
    /// Enumerate weight data passing the integrality checks.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        points: usize,
        #[arg(long)]
        bound: u32,
        #[arg(long)]
        degree: usize,
        /// Maximum number of configurations to examine.
        #[arg(long)]
        cap: Option<u128>,
    },
}

pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Check { file } => commands::check(&InputDocument::load(file)?, cli.max_degree),
        Command::Count { n, n0 } => commands::count(*n, *n0),
        Command::Ring { dim, n } => commands::ring(dim.or(*n).expect("clap enforces one of them")),
        Command::Solve { file } => commands::solve(&InputDocument::load(file)?),
        Command::Reduce { file, n, c } => match (file, n, c) {
            (Some(file), _, _) => {
                let doc = InputDocument::load(file)?;
                commands::reduce(ReduceSource::Document(&doc), cli.max_degree)
            }
            (None, Some(n), Some(c)) => commands::reduce(
                ReduceSource::Model {
                    n: *n,
                    c: parse_rational(c)?,
                },
                cli.max_degree,
            ),
            _ => Err(CliError::Usage(
                "reduce needs a file or both --n and --c".into(),
            )),
        },
        Command::Search {
            n,
            points,
            bound,
            degree,
            cap,
        } => commands::search(
            SearchParams {
                n: *n,
                num_points: *points,
                weight_bound: *bound,
                max_degree: *degree,
            },
            *cap,
        ),
    }
}

/// Parses `args`, runs the command and writes its report. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                let _ = write!(err, "{e}");
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let written = match cli.format {
                Format::Text => write!(out, "{}", report.text),
                Format::Structured => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("report is valid JSON")
                ),
            };
            if written.is_err() {
                return 2;
            }
            report.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
