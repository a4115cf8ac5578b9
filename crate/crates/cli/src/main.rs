mod args;
mod commands;
mod job;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use cbrauer::Error;

use args::Cli;
use job::Job;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Scale { .. } => 3,
        Error::Verification(_) => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.job.format;
    let result = Job::new(cli.job).and_then(|job| {
        let outcome = commands::run(&job, &cli.command)?;
        Ok((outcome.output.render(format)?, outcome.mismatch))
    });
    match result {
        Ok((text, mismatch)) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(text.as_bytes());
            let _ = out.flush();
            match mismatch {
                Some(msg) => {
                    eprintln!("verification failed: {msg}");
                    ExitCode::from(4)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
