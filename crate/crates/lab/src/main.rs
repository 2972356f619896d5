use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use lfactor_lab::commands::{self, Command};
use lfactor_lab::config::RunConfig;
use lfactor_lab::error::LabError;
use lfactor_lab::output::Format;

/// Exact computations of basic functions, zeta integrals and L-factors.
#[derive(Parser, Debug)]
#[command(name = "lfactor-lab", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// JSON run configuration.
    #[arg(long)]
    config: PathBuf,
    /// Overrides the truncation order from the configuration.
    #[arg(long)]
    order: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn execute(cli: &Cli) -> Result<(String, bool), LabError> {
    let mut config = RunConfig::load(&cli.config)?;
    if let Some(order) = cli.order {
        config.order = order;
    }
    let base = cli.config.parent().map(PathBuf::from).unwrap_or_default();
    let outcome = commands::run(cli.command, &config, &base)?;
    Ok((outcome.report.render(cli.format), outcome.check_failed))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok((text, failed)) => {
            print!("{text}");
            if failed {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
