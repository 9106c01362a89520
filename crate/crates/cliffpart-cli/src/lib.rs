//! Command-line front end for `cliffpart`: partition values, word traces and
//! the verification suites, reported as JSON or CSV.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 capacity guard, 64 usage.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub mod commands;
pub mod config;
pub mod report;
pub mod verify;

use config::{FileConfig, Format, RunConfig, GUARD_ENV};
use report::{ErrorReport, RunReport, VerifyReport};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_CAPACITY: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] cliffpart::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Library(cliffpart::Error::InvalidInput(_)) => EXIT_USAGE,
            CliError::Library(cliffpart::Error::InvalidOrder { .. }) => EXIT_USAGE,
            CliError::Library(cliffpart::Error::Capacity { .. }) => EXIT_CAPACITY,
            CliError::Library(_) => EXIT_FAILURE,
        }
    }

    pub fn report(&self) -> ErrorReport {
        let (kind, what, required, limit) = match self {
            CliError::Usage(_) => ("usage", None, None, None),
            CliError::Library(cliffpart::Error::Capacity { what, required, limit }) => (
                "capacity",
                Some(what.to_string()),
                Some(required.to_string()),
                Some(limit.to_string()),
            ),
            CliError::Library(cliffpart::Error::NumericDomain(_)) => ("numeric-domain", None, None, None),
            CliError::Library(_) => ("failure", None, None, None),
        };
        ErrorReport {
            kind: kind.to_string(),
            message: self.to_string(),
            what,
            required,
            limit,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "cliffpart", version, about = "Z_n vector Potts partition functions on the torus")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Partition function by one or all routes, compared pairwise.
    Partition(CommonArgs),
    /// Normalized trace of a generator word (labels g1.. and gb1..).
    Trace {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(required = true, num_args = 1..)]
        word: Vec<String>,
    },
    /// Runs every verification suite.
    Verify {
        #[command(flatten)]
        common: CommonArgs,
        /// Shift the commutation exponent of generators I,J (negative control).
        #[arg(long, value_name = "I,J", hide = true)]
        inject_fault: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// TOML file with the same keys as the flags; flags win.
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<f64>,
    /// brute | transfer | decomposed | multisum | closed-form | all
    #[arg(long)]
    pub method: Option<String>,
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Record wall times; reports are then no longer reproducible.
    #[arg(long)]
    pub timings: bool,
    #[arg(long, value_name = "BITS")]
    pub dense_bits: Option<u32>,
    #[arg(long, value_name = "BITS")]
    pub brute_bits: Option<u32>,
    #[arg(long, value_name = "BITS")]
    pub multisum_bits: Option<u32>,
    #[arg(long, value_name = "LEN")]
    pub trace_len: Option<usize>,
    #[arg(long, value_name = "REL")]
    pub pipeline_tol: Option<f64>,
    #[arg(long, value_name = "REL")]
    pub closed_form_tol: Option<f64>,
}

#[derive(Debug, Clone, Copy, clap::ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
}

impl CommonArgs {
    fn resolve(&self, guard_env: Option<&str>) -> Result<RunConfig, CliError> {
        let file = match &self.config {
            Some(path) => FileConfig::load(path)?,
            None => FileConfig::default(),
        };
        let flags = FileConfig {
            n: self.n,
            p: self.p,
            q: self.q,
            a: self.a,
            b: self.b,
            method: self.method.clone(),
            format: self.format.map(|f| match f {
                FormatArg::Json => Format::Json,
                FormatArg::Csv => Format::Csv,
            }),
            seed: self.seed,
            timings: self.timings.then_some(true),
            dense_bits: self.dense_bits,
            brute_bits: self.brute_bits,
            multisum_bits: self.multisum_bits,
            trace_len: self.trace_len,
            pipeline_tol: self.pipeline_tol,
            closed_form_tol: self.closed_form_tol,
        };
        RunConfig::resolve(file.overlay(flags), guard_env)
    }
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn render(report: &RunReport, format: Format) -> String {
    match format {
        Format::Json => report::to_json(report),
        Format::Csv => report::to_csv(report),
    }
}

fn parse_pair(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("expected I,J but got {s:?}"));
    let (i, j) = s.split_once(',').ok_or_else(bad)?;
    Ok((i.trim().parse().map_err(|_| bad())?, j.trim().parse().map_err(|_| bad())?))
}

fn execute(command: &Command, guard_env: Option<&str>) -> Result<(RunReport, Format, bool), CliError> {
    match command {
        Command::Partition(args) => {
            let cfg = args.resolve(guard_env)?;
            let r = commands::partition(&cfg)?;
            let ok = r.passed;
            Ok((RunReport::Partition(r), cfg.format, ok))
        }
        Command::Trace { common, word } => {
            let cfg = common.resolve(guard_env)?;
            let r = commands::trace(&cfg, word)?;
            let ok = r.agree;
            Ok((RunReport::Trace(r), cfg.format, ok))
        }
        Command::Verify { common, inject_fault } => {
            let cfg = common.resolve(guard_env)?;
            let mut opts = verify::VerifyOptions::new(cfg.seed);
            opts.pipeline_rel = cfg.tolerances.pipeline_rel;
            opts.closed_form_rel = cfg.tolerances.closed_form_rel;
            opts.inject_fault = inject_fault.as_deref().map(parse_pair).transpose()?;
            let suites = verify::run_all(&opts);
            let passed = suites.iter().all(|s| s.passed);
            let r = VerifyReport {
                suites,
                passed,
                environment: report::Environment::from_config(&cfg),
            };
            Ok((RunReport::Verify(r), cfg.format, passed))
        }
    }
}

fn format_hint(args: &[String]) -> Format {
    let csv = args.windows(2).any(|w| w[0] == "--format" && w[1] == "csv") || args.iter().any(|a| a == "--format=csv");
    if csv {
        Format::Csv
    } else {
        Format::Json
    }
}

/// Runs the tool on `args` (program name first) with the given guard
/// environment value.
pub fn run(args: &[String], guard_env: Option<&str>) -> Outcome {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == EXIT_PASS { (text, String::new()) } else { (String::new(), text) };
            return Outcome { stdout, stderr, code };
        }
    };
    match execute(&cli.command, guard_env) {
        Ok((report, format, ok)) => Outcome {
            stdout: render(&report, format),
            stderr: String::new(),
            code: if ok { EXIT_PASS } else { EXIT_FAILURE },
        },
        Err(e) => Outcome {
            stdout: render(&RunReport::Error(e.report()), format_hint(args)),
            stderr: format!("cliffpart: {e}\n"),
            code: e.exit_code(),
        },
    }
}

/// Reads the guard override from the process environment.
pub fn guard_env() -> Option<String> {
    std::env::var(GUARD_ENV).ok()
}
