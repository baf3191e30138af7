use std::io::Write;
use std::process::ExitCode;

use isect_alg::{main_with_args, Outcome, EXIT_USAGE};

fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var("ISECT_ALG_THREADS") else {
        return Ok(());
    };
    let threads: usize = value.parse().ok().filter(|&t| t > 0).ok_or_else(|| {
        format!("invalid value for ISECT_ALG_THREADS: `{value}` is not a positive integer")
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let outcome = match configure_threads() {
        Ok(()) => main_with_args(std::env::args_os()),
        Err(message) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("{message}\n"),
        },
    };
    // a closed pipe is not worth a panic
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
