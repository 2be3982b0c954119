use std::process::ExitCode;

use clap::Parser;
use pdyn_cli::{execute, render, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let text = if cli.json { render::to_json(&out.doc) } else { render::to_text(&out.doc) };
            print!("{text}");
            ExitCode::from(out.status as u8)
        }
        Err(e) => {
            eprintln!("pdyn: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
