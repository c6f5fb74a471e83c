mod args;
mod commands;
mod config;
mod error;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Simulate(a) => commands::simulate(a),
        Command::Synthesize(a) => commands::synthesize_cmd(a),
        Command::Verify(a) => commands::verify(a),
        Command::Bound(a) => commands::bound(a),
        Command::Generate(a) => commands::generate(a),
    };
    match result {
        Ok(line) => {
            println!("{line}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
