use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use egyptpoly_cli::{run, Cli, EXIT_PRECONDITION};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(exit) => {
            let _ = out.flush();
            ExitCode::from(exit as u8)
        }
        Err(e) => {
            let _ = out.flush();
            eprintln!("egyptpoly: {e:#}");
            ExitCode::from(EXIT_PRECONDITION as u8)
        }
    }
}
