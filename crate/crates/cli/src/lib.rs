//! Command-line front end: argument parsing, documents and their rendering.

pub mod document;
pub mod render;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use connidx::rootsys::{CartanType, Series};
use connidx::suite::{run_all, run_type, SuiteConfig};
use connidx::weyl::DEFAULT_CAP;
use serde::Serialize;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "connidx", version, about = "Connection index, alcove stabilizers and extended quotients of compact Lie groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full report for one type.
    Report(ReportArgs),
    /// Run the invariant suites; exit 1 on any failure.
    Verify(VerifyArgs),
    /// Component table and fibers of the extended quotient.
    Extquot(ReportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Args)]
pub struct TypeArgs {
    #[arg(long = "type", value_name = "SERIES")]
    pub series: Series,
    #[arg(long)]
    pub rank: usize,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[command(flatten)]
    pub target: TypeArgs,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: u64,
    #[arg(long, default_value_t = 4)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Every type up to `--max-rank`.
    #[arg(long, conflicts_with_all = ["series", "rank"])]
    pub all: bool,
    #[arg(long = "type", value_name = "SERIES", requires = "rank")]
    pub series: Option<Series>,
    #[arg(long, requires = "series")]
    pub rank: Option<usize>,
    #[arg(long, default_value_t = 8)]
    pub max_rank: usize,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: u64,
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

/// Output and exit code of one invocation.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn usage(msg: impl Into<String>) -> Self {
        Self { stdout: String::new(), stderr: format!("error: {}\n", msg.into()), code: EXIT_USAGE }
    }

    fn failed(msg: impl Into<String>) -> Self {
        Self { stdout: String::new(), stderr: format!("error: {}\n", msg.into()), code: EXIT_FAILED }
    }

    pub fn emit(&self) -> u8 {
        let _ = std::io::stdout().write_all(self.stdout.as_bytes());
        let _ = std::io::stderr().write_all(self.stderr.as_bytes());
        self.code
    }
}

fn json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

fn config(cap: u64, samples: usize, seed: u64, max_rank: usize) -> SuiteConfig {
    SuiteConfig { cap, samples, seed, max_rank, ..SuiteConfig::default() }
}

pub fn execute(cli: Cli) -> Outcome {
    match cli.command {
        Command::Report(a) => {
            let t = match CartanType::new(a.target.series, a.target.rank) {
                Ok(t) => t,
                Err(e) => return Outcome::usage(e.to_string()),
            };
            let cfg = config(a.cap, a.samples, a.seed, t.rank());
            match document::report(t, &cfg) {
                Ok(d) => {
                    let code = if d.checks.iter().any(|c| c.status == "fail") || !d.k_theory.consistent {
                        EXIT_FAILED
                    } else {
                        EXIT_OK
                    };
                    let stdout = match a.format {
                        Format::Json => json(&d),
                        Format::Table => render::report(&d),
                    };
                    Outcome { stdout, stderr: String::new(), code }
                }
                Err(e) => Outcome::failed(e.to_string()),
            }
        }
        Command::Extquot(a) => {
            let t = match CartanType::new(a.target.series, a.target.rank) {
                Ok(t) => t,
                Err(e) => return Outcome::usage(e.to_string()),
            };
            match document::extquot(t, &config(a.cap, a.samples, a.seed, t.rank())) {
                Ok(d) => Outcome {
                    stdout: match a.format {
                        Format::Json => json(&d),
                        Format::Table => render::extquot(&d),
                    },
                    stderr: String::new(),
                    code: EXIT_OK,
                },
                Err(e) => Outcome::failed(e.to_string()),
            }
        }
        Command::Verify(a) => {
            let suites = match (a.all, a.series, a.rank) {
                (true, _, _) => {
                    if a.max_rank == 0 {
                        return Outcome::usage("--max-rank must be at least 1");
                    }
                    run_all(&config(a.cap, a.samples, a.seed, a.max_rank))
                }
                (false, Some(s), Some(r)) => match CartanType::new(s, r) {
                    Ok(t) => vec![run_type(t.canonical(), &config(a.cap, a.samples, a.seed, a.max_rank))],
                    Err(e) => return Outcome::usage(e.to_string()),
                },
                _ => return Outcome::usage("verify needs --all or --type with --rank"),
            };
            let d = document::verify(&suites, &config(a.cap, a.samples, a.seed, a.max_rank));
            Outcome {
                stdout: match a.format {
                    Format::Json => json(&d),
                    Format::Table => render::verify(&d),
                },
                stderr: String::new(),
                code: if d.passed { EXIT_OK } else { EXIT_FAILED },
            }
        }
    }
}
