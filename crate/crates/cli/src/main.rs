//! `axes-ideals` command-line tool.
//!
//! Exit codes: 0 affirmative, 1 negative answer, 2 usage or input error,
//! 3 resource-guard refusal, 4 internal invariant violation.

mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use crate::args::Cli;
use crate::commands::{run, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command, &cli.global) {
        Ok(result) => {
            if let Some(path) = &cli.global.out {
                if let Err(e) = std::fs::write(path, &result.payload) {
                    eprintln!("cannot write {}: {e}", path.display());
                    return ExitCode::from(EXIT_USAGE);
                }
            } else {
                let mut stdout = std::io::stdout().lock();
                let _ = stdout.write_all(result.payload.as_bytes());
            }
            ExitCode::from(result.exit_code)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}
