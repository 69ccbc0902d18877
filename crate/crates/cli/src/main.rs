mod commands;
mod config;

use std::process::ExitCode;

use clap::Parser;

use crate::commands::{run_figure, run_spectrum, run_transform, run_verify, Failure, EXIT_CONFIG, EXIT_FAILED, EXIT_OK};
use crate::config::{Cli, Command, RunConfig};

fn dispatch(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Transform(a) => run_transform(&RunConfig::from_args(&a)?),
        Command::Verify(a) => run_verify(&a),
        Command::Spectrum(a) => run_spectrum(&a),
        Command::Figure(a) => run_figure(&a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // help and version go to stdout and are not errors
            return ExitCode::from(if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK } as u8);
        }
    };
    let code = match std::panic::catch_unwind(|| dispatch(cli)) {
        Ok(Ok(code)) => code,
        Ok(Err(failure)) => {
            eprintln!("susy2: {}", failure.message());
            failure.exit_code()
        }
        Err(_) => {
            eprintln!("susy2: internal error");
            EXIT_FAILED
        }
    };
    ExitCode::from(code as u8)
}
