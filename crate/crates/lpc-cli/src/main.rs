use std::io;
use std::process::ExitCode;

use clap::{CommandFactory, Parser};
use lpc_cli::{run, Cli, USAGE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    match run(&cli, &mut stdout.lock()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("lpc: {e}");
            eprintln!("{}", Cli::command().render_usage());
            ExitCode::from(USAGE)
        }
    }
}
