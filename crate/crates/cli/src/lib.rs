//! `baxter` command-line front end.

mod commands;
pub mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};

pub use report::{Cell, Format, Report};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable capping the worker threads.
pub const THREADS_ENV: &str = "PREC_ASYM_THREADS";

#[derive(Debug, Parser)]
#[command(name = "baxter", version, about = "Exact checks for Baxter numbers, their polynomials and recurrences")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Recompute recurrence seeds from the closed forms instead of using the
    /// stored constants, and fail if they disagree.
    #[arg(long, global = true)]
    pub seed_check: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Baxter numbers and refined rows for n = 0..=max-n.
    Numbers {
        #[arg(long = "max-n")]
        max_n: i64,
    },
    /// Coefficients of the n-th Baxter polynomial.
    Poly {
        #[arg(long)]
        n: i64,
    },
    /// Residuals of a built-in recurrence against directly computed terms.
    VerifyRec {
        #[arg(long)]
        name: String,
        #[arg(long)]
        to: i64,
    },
    /// The two mixed polynomial identities for n = 2..=to.
    VerifyMixed {
        #[arg(long)]
        to: i64,
    },
    /// The three annihilating operators for n = from..=to.
    VerifyOre {
        #[arg(long, default_value_t = 2)]
        from: i64,
        #[arg(long)]
        to: i64,
    },
    /// Formal expansion branches at a characteristic root.
    Asym(AsymArgs),
    /// Real-rootedness of the Baxter polynomials for n = 2..=to.
    Roots {
        #[arg(long)]
        to: i64,
    },
    /// Normality distances and limit ratios for each n in a comma-separated list.
    Clt {
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<i64>,
    },
    /// Brute-force permutation counts compared with the refined numbers.
    Enum {
        #[arg(long)]
        n: usize,
        /// Permit n = 9.
        #[arg(long)]
        allow_large: bool,
    },
}

#[derive(Debug, Args)]
pub struct AsymArgs {
    #[arg(long)]
    pub name: String,
    /// Characteristic root as an integer or p/q.
    #[arg(long, allow_hyphen_values = true)]
    pub root: String,
    #[arg(long, default_value_t = 2)]
    pub order: usize,
}

/// A failure before any report exists.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<baxter_core::Error> for CliError {
    fn from(e: baxter_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn thread_cap() -> Result<Option<usize>, CliError> {
    match std::env::var(THREADS_ENV) {
        Err(std::env::VarError::NotPresent) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(k) if k > 0 => Ok(Some(k)),
            _ => Err(CliError::Usage(format!("{THREADS_ENV} must be a positive integer, got {v:?}"))),
        },
        Err(e) => Err(CliError::Usage(format!("{THREADS_ENV}: {e}"))),
    }
}

/// Parses `args` (including the program name), runs the subcommand and
/// writes the report to `stdout`. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => finish(&report, cli.format, stdout, stderr),
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn finish(report: &Report, format: Format, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    if let Err(e) = report.write(format, stdout) {
        let _ = writeln!(stderr, "error: writing report: {e}");
        return EXIT_USAGE;
    }
    if report.pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

/// Validates the configuration, then computes the report on a pool sized by
/// [`THREADS_ENV`].
pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    let plan = commands::validate(cli)?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(k) = thread_cap()? {
        builder = builder.num_threads(k);
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    pool.install(|| commands::run_plan(&plan, cli.seed_check))
}
