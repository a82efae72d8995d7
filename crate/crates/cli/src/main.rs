use std::process::ExitCode;

use clap::Parser;
use gassner_cli::{execute, Flags, JobConfig};

fn main() -> ExitCode {
    let job = match JobConfig::resolve(Flags::parse()) {
        Ok(job) => job,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    match execute(&job) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if e.exit_code() == 3 {
                eprintln!("reproduce with: {}", job.reproducer());
            }
            ExitCode::from(e.exit_code())
        }
    }
}
