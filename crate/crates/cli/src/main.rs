use std::process::ExitCode;

use clap::Parser;
use connidx_cli::{execute, Cli};

fn main() -> ExitCode {
    ExitCode::from(execute(Cli::parse()).emit())
}
