//! `lexcount`: exact moments, lexicographic arrays and last-passage counts
//! from the command line.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lexcount_core::Strategy;

use crate::report::Method;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: u8 = 0;
    pub const DISAGREEMENT: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const GUARD: u8 = 3;
    pub const IO: u8 = 4;
}

/// Environment variable holding the worker thread count.
pub const THREADS_ENV: &str = "LEXCOUNT_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "lexcount",
    version,
    about = "Exact CUE moments, lexicographic arrays and last-passage counts"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Leave wall-clock timings out of the output.
    #[arg(long, global = true)]
    pub no_timing: bool,

    /// Allow brute-force methods above the guard limits.
    #[arg(long, global = true)]
    pub force: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the moment / number of arrays for one (m, N).
    Count(CountArgs),
    /// Run several methods over a grid of (m, N) and check they agree.
    Verify(VerifyArgs),
    /// List the lexicographic arrays over m letters with longest weakly
    /// increasing subsequence at most N.
    Enumerate(EnumerateArgs),
    /// Apply the RSK correspondence to a biword, or invert it.
    Rsk(RskArgs),
    /// Last-passage percolation.
    #[command(subcommand)]
    Lpp(LppCommand),
    /// Arithmetic factor and limit diagnostics.
    #[command(subcommand)]
    Zeta(ZetaCommand),
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub m: u32,
    #[arg(long = "N")]
    pub n: u64,
    #[arg(long, value_enum, default_value_t = Method::Product)]
    pub method: Method,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Cells as `m:n` or `m:lo-hi`, comma separated, e.g. `1:1-5,2:1-3`.
    #[arg(long, conflicts_with_all = ["m_max", "n_max"])]
    pub cells: Option<String>,
    /// Rectangle 0..=m-max by 0..=n-max.
    #[arg(long, requires = "n_max")]
    pub m_max: Option<u32>,
    #[arg(long, requires = "m_max")]
    pub n_max: Option<u64>,
    /// Methods to run (default: all that fit the guard limits).
    #[arg(long, value_enum, value_delimiter = ',')]
    pub methods: Vec<Method>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub m: u32,
    #[arg(long = "N")]
    pub n: usize,
    /// Only arrays with this many columns.
    #[arg(long)]
    pub size: Option<usize>,
}

#[derive(Debug, Args)]
pub struct RskArgs {
    /// JSON input file (stdin when absent).
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Read a tableau pair and produce the biword.
    #[arg(long)]
    pub inverse: bool,
}

#[derive(Debug, Subcommand)]
enum LppCommand {
    /// Passage time and an optimal chain for a matrix.
    Time {
        /// PlanarArray JSON file.
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Number of m x m matrices with passage time at most N.
    Count {
        #[arg(long)]
        m: u32,
        #[arg(long = "N")]
        n: u64,
    },
}

#[derive(Debug, Subcommand)]
enum ZetaCommand {
    /// Truncated Euler product a(m).
    AFactor(AFactorArgs),
    /// moment(m, N) / N^(m^2) over a list of N.
    FEstimate(LimitArgs),
    /// The same table read as I_m / a(m), conditional on I_m = a(m) f(m).
    Ratio(LimitArgs),
}

#[derive(Debug, Args)]
pub struct AFactorArgs {
    #[arg(long)]
    pub m: u32,
    #[arg(long, default_value_t = lexcount_core::moments::DEFAULT_PRIME_CUTOFF)]
    pub prime_cutoff: u64,
    #[arg(long, default_value_t = lexcount_core::moments::DEFAULT_SERIES_CUTOFF)]
    pub series_cutoff: u32,
    #[arg(long, default_value_t = lexcount_core::moments::DEFAULT_PRECISION_BITS)]
    pub precision: usize,
}

#[derive(Debug, Args)]
pub struct LimitArgs {
    #[arg(long)]
    pub m: u32,
    #[arg(long = "N-list", value_delimiter = ',', required = true)]
    pub n_list: Vec<u64>,
}

/// Settings shared by every command.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub opts: GlobalOpts,
    pub strategy: Strategy,
    pub threads: usize,
}

impl RunConfig {
    pub fn timing(&self) -> bool {
        !self.opts.no_timing
    }
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: exit::USAGE,
            message: message.into(),
        }
    }

    pub fn guard(message: impl Into<String>) -> Self {
        Failure {
            code: exit::GUARD,
            message: message.into(),
        }
    }

    pub fn io(message: impl Into<String>) -> Self {
        Failure {
            code: exit::IO,
            message: message.into(),
        }
    }
}

impl From<lexcount_core::Error> for Failure {
    fn from(e: lexcount_core::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

/// What a command produced: the rendered text and its exit code.
pub struct Outcome {
    pub text: String,
    pub code: u8,
}

impl Outcome {
    pub fn ok(text: String) -> Self {
        Outcome {
            text,
            code: exit::SUCCESS,
        }
    }
}

fn thread_degree() -> Result<usize, Failure> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(Failure::usage(format!(
                "{THREADS_ENV} must be a positive integer, got {v:?}"
            ))),
        },
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

fn configure(opts: GlobalOpts) -> Result<RunConfig, Failure> {
    let threads = thread_degree()?;
    let strategy = if threads > 1 {
        Strategy::Parallel
    } else {
        Strategy::Sequential
    };
    #[cfg(feature = "parallel")]
    if strategy == Strategy::Parallel {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Failure::usage(format!("cannot start worker pool: {e}")))?;
    }
    Ok(RunConfig {
        opts,
        strategy,
        threads,
    })
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    let config = configure(cli.global)?;
    match cli.command {
        Command::Count(args) => commands::count(&config, &args),
        Command::Verify(args) => commands::verify(&config, &args),
        Command::Enumerate(args) => commands::enumerate(&config, &args),
        Command::Rsk(args) => commands::rsk(&config, &args),
        Command::Lpp(LppCommand::Time { matrix }) => commands::lpp_time(&config, &matrix),
        Command::Lpp(LppCommand::Count { m, n }) => commands::count(
            &config,
            &CountArgs {
                m,
                n,
                method: Method::BruteMatrices,
            },
        ),
        Command::Zeta(ZetaCommand::AFactor(args)) => commands::a_factor(&config, &args),
        Command::Zeta(ZetaCommand::FEstimate(args)) => commands::limit(&config, &args, false),
        Command::Zeta(ZetaCommand::Ratio(args)) => commands::limit(&config, &args, true),
    }
    .and_then(|outcome| {
        write_output(&config, &outcome.text)?;
        Ok(outcome)
    })
}

fn write_output(config: &RunConfig, text: &str) -> Result<(), Failure> {
    match &config.opts.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::io(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Failure::io(format!("cannot write to stdout: {e}")))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                exit::USAGE
            } else {
                exit::SUCCESS
            });
        }
    };
    match run(cli) {
        Ok(outcome) => ExitCode::from(outcome.code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
