use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use ramanujan_verify::report::{emit_report, exit_code};
use ramanujan_verify::{run_suite, ConfigOverrides, OutputFormat, Status, Suite};

/// Run the verification suites and print a report.
#[derive(Debug, Parser)]
#[command(name = "verify", version)]
struct Cli {
    /// closed-forms, theorems, g-identities or all
    #[arg(long)]
    suite: Option<Suite>,
    /// Tolerance applied to every check instead of the per-check defaults
    #[arg(long)]
    tol: Option<f64>,
    /// Series terms summed before the tail fit
    #[arg(long)]
    max_terms: Option<usize>,
    /// Trapezoid step of the Meijer G contour
    #[arg(long)]
    contour_step: Option<f64>,
    /// Fixed contour truncation height
    #[arg(long)]
    t_max: Option<f64>,
    /// json, csv or markdown
    #[arg(long)]
    format: Option<OutputFormat>,
    /// Worker threads
    #[arg(long)]
    workers: Option<usize>,
    /// key = value file with the same settings; flags win
    #[arg(long)]
    config: Option<PathBuf>,
}

impl Cli {
    fn overrides(&self) -> ConfigOverrides {
        ConfigOverrides {
            suite: self.suite,
            tol: self.tol,
            max_terms: self.max_terms,
            contour_step: self.contour_step,
            t_max: self.t_max,
            output_format: self.format,
            workers: self.workers,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let file = match &cli.config {
        Some(path) => match ConfigOverrides::from_file(path) {
            Ok(o) => o,
            Err(e) => {
                eprintln!("verify: {e}");
                return ExitCode::from(2);
            }
        },
        None => ConfigOverrides::default(),
    };
    let config = match file.merge(cli.overrides()).resolve() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("verify: {e}");
            return ExitCode::from(2);
        }
    };
    if config.suite == Suite::All {
        eprintln!("verify: running all suites on {} worker(s)", config.workers);
    }
    let records = run_suite(&config);
    let failed = records.iter().filter(|r| r.status == Status::Fail).count();
    eprintln!("verify: {} records, {} passed, {failed} failed", records.len(), records.len() - failed);
    for r in records.iter().filter(|r| r.status == Status::Fail) {
        eprintln!("  FAIL {} rel_residual={:.3e} tol={:.0e}", r.id, r.rel_residual, r.tol);
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    if let Err(e) = emit_report(&records, config.output_format, &mut out).and_then(|()| out.flush()) {
        eprintln!("verify: cannot write report: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(exit_code(&records) as u8)
}
