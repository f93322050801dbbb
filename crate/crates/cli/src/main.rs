use std::process::ExitCode;

use clap::Parser;
use negwit_cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(out) => {
            for path in out.files {
                eprintln!("wrote {}", path.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("negwit: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
