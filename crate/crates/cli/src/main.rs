mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;
use laver::LaverError;

use crate::args::Cli;
use crate::commands::{Outcome, Usage};

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<Usage>().is_some() {
        return 2;
    }
    match err.downcast_ref::<LaverError>() {
        Some(
            LaverError::SizeLimit { .. } | LaverError::Domain(_) | LaverError::Parse(_) | LaverError::Arity { .. },
        ) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match commands::run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
