//! `ascon` command-line tool.
//!
//! Exit codes: 0 success, 2 usage, 3 I/O, 4 authentication failure,
//! 5 verification failure.

mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Encrypt(a) => commands::encrypt(a),
        Command::Decrypt(a) => commands::decrypt(a),
        Command::Kat(a) => commands::kat(a),
        Command::Trace(a) => commands::trace(a),
        Command::Selftest(_) => commands::selftest(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
