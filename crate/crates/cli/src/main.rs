mod args;
mod commands;
mod fixtures;
mod report;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match commands::run(cli) {
        Ok(outcome) => {
            outcome.print(json);
            ExitCode::from(outcome.exit)
        }
        Err(err) => {
            let err = report::InputError(err);
            err.print(json);
            ExitCode::from(2)
        }
    }
}
