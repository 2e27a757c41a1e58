//! Command-line front end for `dforms`: tensor documents in, exact reports out.
//!
//! Exit codes: 0 success, 1 usage, 2 validation failure, 3 identity or oracle failure.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

pub mod commands;
pub mod document;
pub mod report;

use commands::{Degree, SelftestOptions};
use document::TensorDocument;
use report::Report;

/// Exit code 3 is not an error value: it comes from a report's failure list.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Validation(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Validation(m) => write!(f, "invalid input: {m}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Validation(_) => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "dforms", version, about = "Exact curvature invariants through double forms")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Add 20-digit decimal approximations (labelled approximate).
    #[arg(long, global = true)]
    decimal: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// Tensor document (JSON); `-` reads standard input.
    #[arg(long)]
    input: PathBuf,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Ricci and scalar curvature, Weyl norm, Gauss-Bonnet curvatures, norms of powers.
    Invariants(Input),
    /// Pontrjagin form P_k or a mixed product, and the scalar when n = 4k.
    Pontrjagin {
        #[command(flatten)]
        input: Input,
        #[arg(long, required_unless_present = "partition", conflicts_with = "partition")]
        k: Option<usize>,
        /// Multiplicities k_1,k_2,... of P_1, P_2, ...
        #[arg(long)]
        partition: Option<String>,
        /// Recompute through the independent routes and require agreement.
        #[arg(long)]
        oracle: bool,
        /// Volume RATIONAL[*pi^INT]; multiplies the scalar.
        #[arg(long)]
        volume: Option<String>,
    },
    /// Einstein, hyper-Einstein, Thorpe, conformal flatness and flatness tests.
    Classify(Input),
    /// Runs the identity suites.
    Selftest {
        /// Scope or identity name.
        #[arg(long)]
        scope: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Restrict to one dimension.
        #[arg(long)]
        n: Option<usize>,
        /// Random cases per identity.
        #[arg(long, default_value_t = 200)]
        cases: usize,
        /// Deliberately corrupt an operator, to test the harness.
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
    /// Lists the model catalog.
    Models,
}

fn read_document(path: &Path) -> Result<TensorDocument, CliError> {
    let mut text = String::new();
    if path == Path::new("-") {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Usage(format!("reading standard input: {e}")))?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("reading {}: {e}", path.display())))?;
    }
    TensorDocument::parse(&text)
}

fn execute(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Models => Ok(commands::cmd_models()),
        Command::Invariants(i) => commands::cmd_invariants(&read_document(&i.input)?),
        Command::Classify(i) => commands::cmd_classify(&read_document(&i.input)?),
        Command::Pontrjagin {
            input,
            k,
            partition,
            oracle,
            volume,
        } => {
            let degree = match (k, partition) {
                (Some(k), _) => Degree::K(*k),
                (None, Some(p)) => Degree::Partition(p.parse().map_err(|e| CliError::Usage(format!("--partition: {e}")))?),
                (None, None) => unreachable!("clap requires one of them"),
            };
            let volume = volume
                .as_deref()
                .map(|v| v.parse().map_err(|e| CliError::Usage(format!("--volume: {e}"))))
                .transpose()?;
            commands::cmd_pontrjagin(&read_document(&input.input)?, &degree, *oracle, volume)
        }
        Command::Selftest {
            scope,
            seed,
            n,
            cases,
            inject_fault,
        } => {
            let fault = inject_fault
                .as_deref()
                .map(|f| f.parse().map_err(|e| CliError::Usage(format!("--inject-fault: {e}"))))
                .transpose()?;
            commands::cmd_selftest(&SelftestOptions {
                scope: scope.clone(),
                seed: *seed,
                n: *n,
                cases: *cases,
                fault,
            })
        }
    }
}

/// Runs the command line `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let report = if cli.decimal { report.with_decimals() } else { report };
            let text = if cli.json { report.to_json() + "\n" } else { report.to_table() };
            let _ = out.write_all(text.as_bytes());
            if report.failures.is_empty() {
                0
            } else {
                let _ = writeln!(err, "{} check(s) failed", report.failures.len());
                3
            }
        }
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.exit_code()
        }
    }
}
