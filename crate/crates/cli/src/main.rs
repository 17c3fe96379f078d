use std::process::ExitCode;
use std::time::Instant;

fn main() -> ExitCode {
    let start = Instant::now();
    let report = ncgraded_cli::dispatch(std::env::args());
    print!("{}", report.render());
    if report.notice.is_none() {
        eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    }
    ExitCode::from(report.exit_code() as u8)
}
