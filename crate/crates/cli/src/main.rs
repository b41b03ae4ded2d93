mod args;
mod commands;
mod input;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute {
            input,
            run,
            profile,
            classify,
        } => commands::compute(input, run, *profile, *classify),
        Command::Verify {
            run, list: true, ..
        } => commands::list_statements(run),
        Command::Verify {
            input,
            run,
            statements,
            timings,
            ..
        } => commands::verify(input, run, statements, *timings),
        Command::Search {
            input,
            run,
            objective,
            direction,
        } => commands::search(input, run, *objective, *direction),
        Command::Bench { input, run } => commands::bench(input, run),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
