mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;
use steiner_ecc::Error;

use args::Cli;

/// Everything that ends a run early, each kind with a stable exit code.
#[derive(Debug)]
pub enum Failure {
    Core(Error),
    Io(String),
    Usage(String),
    VerifyFailed(usize),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Io(_) | Failure::Usage(_) => 2,
            Failure::VerifyFailed(_) => 5,
            Failure::Core(e) => match e {
                Error::Infeasible(_) | Error::InfeasibleSequence(_) | Error::Incomparable => 3,
                Error::InvalidSite(_) | Error::NotGeneralizedStar | Error::AlreadyBalanced => 4,
                Error::CapExceeded { .. } => 6,
                _ => 2,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Io(m) | Failure::Usage(m) => m.clone(),
            Failure::VerifyFailed(n) => format!("{n} verification report(s) failed"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}
