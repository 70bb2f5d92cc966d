use std::io::{stdout, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    nsemigroup::cli::configure_workers();
    let mut out = stdout().lock();
    let code = nsemigroup::cli::run(std::env::args_os(), &mut out);
    let _ = out.flush();
    ExitCode::from(code as u8)
}
