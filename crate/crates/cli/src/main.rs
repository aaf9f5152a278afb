use std::process::ExitCode;

use gzcz_cli::{run_command, EXIT_FAILED, EXIT_OK};

fn main() -> ExitCode {
    let outcome = run_command(std::env::args_os());
    if !outcome.report.is_empty() {
        if outcome.status == EXIT_OK || outcome.status == EXIT_FAILED {
            println!("{}", outcome.report);
        } else {
            eprintln!("{}", outcome.report);
        }
    }
    ExitCode::from(outcome.status as u8)
}
