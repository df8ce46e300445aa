use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use fqconn_cli::{run, RunConfig};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    match run(&config) {
        Ok(outcome) => {
            let written = match &config.out {
                Some(path) => std::fs::write(path, &outcome.output),
                None => std::io::stdout().write_all(outcome.output.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            eprintln!("{}", outcome.summary);
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
