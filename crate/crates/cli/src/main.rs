use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use cpgraph_cli::{emit, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|output| {
        if let Some(text) = emit(&output)? {
            // a closed pipe is not worth an error exit
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
        }
        Ok(())
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
