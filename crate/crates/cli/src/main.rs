use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use jtgraph_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match jtgraph_cli::run(cli) {
        Ok(Some(text)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
