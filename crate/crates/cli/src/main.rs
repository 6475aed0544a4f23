use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use monores_cli::{exit, run, Cli, Job};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE as u8 } else { exit::OK as u8 });
        }
    };
    let outcome = run(&Job::from(cli));
    for line in &outcome.stderr {
        eprintln!("{line}");
    }
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(outcome.stdout.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(exit::USAGE as u8);
    }
    ExitCode::from(outcome.code as u8)
}
