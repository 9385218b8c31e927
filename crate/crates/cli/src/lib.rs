//! Library side of the `kiter` command: argument parsing and command
//! execution, returning captured output so it can be tested in-process.

pub mod args;
mod commands;
mod report;
pub mod verify;

use std::ffi::OsString;

use clap::Parser;
use kiter_core::Error;

pub use args::{Cli, Command, Input};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// What a command printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(code: i32, message: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: message,
        }
    }
}

pub(crate) fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome::error(EXIT_USAGE, text)
            } else {
                Outcome::ok(text)
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    match commands::execute(&cli.command) {
        Ok(report) => {
            let stdout = if cli.json {
                report.json
            } else {
                report.text
            };
            Outcome {
                code: report.code,
                stdout,
                stderr: report.diagnostics,
            }
        }
        Err(e) => Outcome::error(exit_code(&e), format!("error: {e}\n")),
    }
}
