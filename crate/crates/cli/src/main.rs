use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use qhsynth::commands::{run_command, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let (stdout, failure) = match run_command(&cli.command) {
        Ok(outcome) => (outcome.stdout, outcome.failure),
        Err(e) => (String::new(), Some(e)),
    };
    let mut out = std::io::stdout().lock();
    if out
        .write_all(stdout.as_bytes())
        .and_then(|_| out.flush())
        .is_err()
    {
        return ExitCode::from(1);
    }
    match failure {
        None => ExitCode::SUCCESS,
        Some(e) => {
            eprintln!("qhsynth: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
