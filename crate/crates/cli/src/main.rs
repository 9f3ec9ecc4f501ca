//! `addrep`: representation functions, block constructions and the special
//! sequences, from the command line.
//!
//! Exit status: 0 on success, 1 when a requested check fails (the first
//! failing check is named on stderr), 2 on usage or input errors.

mod args;
mod commands;
mod input;
mod outcome;

use std::process::ExitCode;

use clap::Parser;

use crate::args::Cli;
use crate::outcome::Failure;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("FAIL: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
