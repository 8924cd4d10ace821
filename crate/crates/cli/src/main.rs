use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use ising_cli::{render, Cli, CliError};

fn write_out(cli: &Cli, csv: &str) -> Result<(), CliError> {
    match &cli.opts.out {
        Some(path) => std::fs::write(path, csv)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(csv.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match render(&cli).and_then(|csv| write_out(&cli, &csv)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ising2q: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
