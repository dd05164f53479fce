//! The `superrep` command-line driver.

pub mod commands;
pub mod report;
pub mod specfile;

use std::ffi::OsString;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use superrep::classify::DEFAULT_SEED;
use thiserror::Error;

pub use report::Report;

/// Exit status of a run.
pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, unreadable or invalid files, unsupported combinations.
    #[error("{0}")]
    Input(String),
    /// A computation broke one of its own consistency checks.
    #[error("{0}")]
    Math(String),
}

impl From<specfile::SpecError> for CliError {
    fn from(e: specfile::SpecError) -> Self {
        CliError::Input(e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(name = "superrep", version, about = "Representation rings of Lie superalgebras with Clifford shifts")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Validate,
    Classify,
    Kgroups,
    Exactseq,
    AbsTable,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the Jacobi identity and every module's relations.
    Validate(Options),
    /// Composition factors and type tags of every module.
    Classify(Options),
    /// R_Z2, R+, R- and SR at each degree.
    Kgroups(Options),
    /// Verify a periodic exact sequence node by node.
    Exactseq(Options),
    /// SR^-n of the trivial algebra: the K-theory of a point.
    AbsTable(Options),
}

#[derive(clap::Args, Debug, Clone)]
pub struct Options {
    /// trivial, q1 or clifford:p,q
    #[arg(long, conflicts_with = "spec")]
    pub builtin: Option<String>,
    /// JSON description file
    #[arg(long)]
    pub spec: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub field: Option<FieldArg>,
    /// `a..b` (inclusive) or a single `n`; degree `n` means `−n`
    #[arg(long)]
    pub degrees: Option<String>,
    #[arg(long, value_enum, default_value = "six-complex")]
    pub variant: VariantArg,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// λ values for q1, comma separated
    #[arg(long, allow_hyphen_values = true, default_value = "4,-4")]
    pub samples: String,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldArg {
    #[value(name = "R", alias = "r")]
    R,
    #[value(name = "C", alias = "c")]
    C,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum VariantArg {
    SixComplex,
    SixReal,
    Twentyfour,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn parse_degrees(s: &str) -> Result<RangeInclusive<usize>, CliError> {
    let bad = || CliError::Input(format!("degrees must look like a..b or n, got {s:?}"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let range = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?,
        None => {
            let n = num(s)?;
            n..=n
        }
    };
    if range.is_empty() {
        return Err(bad());
    }
    Ok(range)
}

/// Output and exit status of one invocation.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    let (kind, opts) = match &cli.command {
        Command::Validate(o) => (CommandKind::Validate, o),
        Command::Classify(o) => (CommandKind::Classify, o),
        Command::Kgroups(o) => (CommandKind::Kgroups, o),
        Command::Exactseq(o) => (CommandKind::Exactseq, o),
        Command::AbsTable(o) => (CommandKind::AbsTable, o),
    };
    match commands::execute(kind, opts) {
        Ok(report) => Outcome {
            code: if report.passed { EXIT_PASS } else { EXIT_FAIL },
            stdout: match opts.format {
                Format::Text => report.text(),
                Format::Json => report.json(),
            },
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: match e {
                CliError::Input(_) => EXIT_INPUT,
                CliError::Math(_) => EXIT_FAIL,
            },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
