use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use confspace::cli::{self, Cli};

fn main() -> ExitCode {
    let args = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match cli::run(&args, &mut out).and_then(|code| out.flush().map(|_| code)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            cli::EXIT_FAILED
        }
    };
    ExitCode::from(code as u8)
}
