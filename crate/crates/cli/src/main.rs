mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command, Suite};
use commands::Report;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn run(cli: &Cli) -> anyhow::Result<Report> {
    let c = &cli.common;
    match &cli.command {
        Command::Moments { weight, count } => commands::moments((*weight).into(), *count, c.format),
        Command::Gammas {
            n,
            table,
            corrupt_moment,
        } => commands::gammas(*n, *table, *corrupt_moment, c.format),
        Command::Verify { suite, n } => match suite {
            Suite::Conjecture => commands::verify_conjecture_cmd(*n, c.format),
            Suite::Mapping => commands::verify_mapping_cmd(*n, c.format),
            Suite::Orthogonality => commands::verify_orthogonality_cmd(*n, c.tol, c.format),
            Suite::Weights => commands::verify_weights_cmd(c.tol, c.format),
        },
    }
}

fn emit(cli: &Cli, body: &str) -> std::io::Result<()> {
    match &cli.common.out {
        Some(path) => std::fs::write(path, body),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())?;
            out.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };

    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_FAIL);
        }
    };
    if let Err(e) = emit(&cli, &report.body) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}
