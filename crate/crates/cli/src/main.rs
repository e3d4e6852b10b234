//! `uhs`: sort files, run counted benchmark sweeps, prove stability
//! verdicts, and run the verification suite.

mod args;
mod bench;
mod sort;
mod stability;
mod verify;

use std::fmt;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

/// A command failure, carrying its exit status.
#[derive(Debug)]
pub enum CliError {
    /// Bad input or flags: exit 2.
    Input(String),
    /// A verification, benchmark, or output failure: exit 1.
    Failure(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Failure(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Failure(m) => f.write_str(m),
        }
    }
}

impl From<uhs_core::Error> for CliError {
    fn from(e: uhs_core::Error) -> Self {
        match e {
            uhs_core::Error::Domain(_) => CliError::Input(e.to_string()),
            other => CliError::Failure(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sort(a) => sort::run(a),
        Command::Bench(a) => bench::run(a),
        Command::Stability(a) => stability::run(a),
        Command::Verify(a) => verify::run(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("uhs: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
