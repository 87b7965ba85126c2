use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use hyperconifold_cli::{run, Cli, EXIT_INVALID_INPUT};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(output) => {
            let written = match &cli.global.out {
                Some(path) => {
                    std::fs::write(path, &output).map_err(|e| format!("cannot write {}: {e}", path.display()))
                }
                None => std::io::stdout().write_all(output.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => 0,
                Err(message) => {
                    eprintln!("error: {message}");
                    EXIT_INVALID_INPUT
                }
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    };
    ExitCode::from(code as u8)
}
