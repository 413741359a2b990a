//! Command dispatch for the `skein` binary.

pub mod commands;
pub mod config;
pub mod error;
pub mod output;

pub use config::{parse_grid, Cli, Command, Format, RunConfig};
pub use error::{CliError, EXIT_DOMAIN, EXIT_USAGE};
pub use output::Report;

/// Runs a parsed command line: the rendered output and the exit status.
pub fn run(cli: &Cli) -> Result<(String, i32), CliError> {
    let cfg = RunConfig::from_cli(cli)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.parallelism)
        .build()
        .map_err(|e| CliError::usage(format!("cannot start {} threads: {e}", cfg.parallelism)))?;
    let report = pool.install(|| commands::run(&cli.command, &cfg))?;
    let out = report.render(cfg.format)?;
    Ok((out, if report.ok { 0 } else { EXIT_DOMAIN }))
}
