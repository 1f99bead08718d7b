use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let output = sppm_cli::run_command(std::env::args_os(), &mut std::io::stdin().lock());
    let _ = std::io::stdout().write_all(output.stdout.as_bytes());
    let _ = std::io::stderr().write_all(output.stderr.as_bytes());
    ExitCode::from(output.code as u8)
}
