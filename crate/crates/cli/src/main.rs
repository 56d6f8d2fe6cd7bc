use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use twistcube::cli::{run, Cli};
use twistcube::manifest::RunManifest;

fn main() -> ExitCode {
    let start = Instant::now();
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let command = cli.command.name().to_string();
    let (code, input_sha256) = match run(&cli) {
        Ok(done) => {
            let _ = std::io::stdout().write_all(done.stdout.as_bytes());
            (done.exit_code, done.input_sha256)
        }
        Err(e) => {
            eprintln!("error: {e}");
            (2, None)
        }
    };
    let manifest = RunManifest {
        tool: "twistcube",
        version: env!("CARGO_PKG_VERSION"),
        command,
        args,
        input_sha256,
        elapsed_ms: start.elapsed().as_millis(),
        outcome: match code {
            0 => "pass",
            1 => "fail",
            _ => "error",
        },
        exit_code: code,
    };
    eprintln!("{}", manifest.to_line());
    ExitCode::from(code as u8)
}
