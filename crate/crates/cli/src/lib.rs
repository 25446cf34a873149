//! Command-line front end: the equation syntax, series documents and the
//! `mahler` subcommands.

mod commands;
pub mod document;
pub mod dsl;
mod error;

use std::ffi::OsString;

use clap::Parser;

pub use commands::{execute, parse_angle, Cli, Command, Format, Output};
pub use document::{DocumentError, SeriesDocument};
pub use dsl::{format_equation, parse_equation, parse_equation_detailed, DslError, ParsedEquation};
pub use error::CliError;

/// Everything a process would report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Execution {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and runs one subcommand.
pub fn run<I, T>(args: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Execution { code, stdout: text, stderr: String::new() }
            } else {
                Execution { code: 2, stdout: String::new(), stderr: text }
            };
        }
    };
    match run_cli(&cli) {
        Ok(exec) => exec,
        Err(e) => Execution {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn run_cli(cli: &Cli) -> Result<Execution, CliError> {
    let out = execute(&cli.command)?;
    let rendered = out.render(cli.format)?;
    let stdout = match &cli.output {
        Some(path) => {
            std::fs::write(path, &rendered)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            String::new()
        }
        None => rendered,
    };
    Ok(Execution {
        code: out.code,
        stdout,
        stderr: String::new(),
    })
}
