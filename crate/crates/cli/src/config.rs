//! Command-line arguments and the validated run configuration.

use crate::error::CliError;
use asymptotics::MAX_DIGITS;
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "skein", version, about = "Exact Kauffman-bracket skein computations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Significant decimal digits for root-of-unity evaluation.
    #[arg(long, global = true, env = "SKEIN_DIGITS", default_value_t = 30)]
    pub digits: usize,
    /// Largest crossing count accepted by the Khovanov cube.
    #[arg(long = "max-crossings", global = true, default_value_t = khovanov::CROSSING_CAP)]
    pub max_crossings: usize,
    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Progress messages on standard error.
    #[arg(long, short, global = true)]
    pub verbose: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Kauffman bracket of a diagram.
    Bracket {
        file: PathBuf,
        /// Half-twists per slot, comma separated.
        #[arg(long, value_delimiter = ',')]
        k: Vec<usize>,
    },
    /// Jones polynomial (color 1 unless --n is given).
    Jones {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        unreduced: bool,
        #[arg(long, value_delimiter = ',')]
        k: Vec<usize>,
    },
    /// Colored Jones polynomial.
    ColoredJones {
        file: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        unreduced: bool,
        #[arg(long, value_delimiter = ',')]
        k: Vec<usize>,
    },
    /// Integer Khovanov homology.
    Kh {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        k: Vec<usize>,
    },
    /// Stabilization as one slot's twist count grows.
    Stabilize {
        file: PathBuf,
        /// Twist counts for the varying slot, as `a..b` or a list.
        #[arg(long, default_value = "2..8")]
        k: String,
        /// The varying slot (1-based); other slots keep zero twists.
        #[arg(long, default_value_t = 1)]
        slot: usize,
        /// Compare colored Jones polynomials with the limit instead of
        /// comparing Khovanov homology of consecutive members.
        #[arg(long)]
        jones: bool,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Reduce a trivalent graph to theta graphs.
    ReduceKtg { file: PathBuf },
    /// Growth rates at exp(i pi / 2n).
    Asymptote {
        /// Template whose limiting skein is evaluated.
        #[arg(long, conflicts_with = "octahedron", required_unless_present = "octahedron")]
        template: Option<PathBuf>,
        /// Octahedral tetrahedra instead of a template.
        #[arg(long)]
        octahedron: bool,
        /// Colors, as `a..b` or a list.
        #[arg(long, default_value = "2..8")]
        n: String,
    },
    /// Compare the fusion expansion with the direct colored bracket.
    FusionCheck {
        file: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        k: Vec<usize>,
    },
}

/// Validated settings shared by every command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub format: Option<Format>,
    pub digits: usize,
    pub crossing_cap: usize,
    pub parallelism: usize,
    pub verbose: bool,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        if cli.digits < 15 || cli.digits > MAX_DIGITS {
            return Err(CliError::usage(format!(
                "--digits must lie in 15..={MAX_DIGITS}, got {}",
                cli.digits
            )));
        }
        if cli.max_crossings > 20 {
            return Err(CliError::usage(format!(
                "--max-crossings must be at most 20, got {}",
                cli.max_crossings
            )));
        }
        if cli.threads == 0 {
            return Err(CliError::usage("--threads must be at least 1"));
        }
        Ok(Self {
            format: cli.format,
            digits: cli.digits,
            crossing_cap: cli.max_crossings,
            parallelism: cli.threads,
            verbose: cli.verbose,
        })
    }
}

/// Parses `a..b`, `a..=b` (both inclusive) or a comma list into a strictly
/// increasing list.
pub fn parse_grid(s: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::usage(format!("cannot read {s:?} as a range `a..b` or a list `a,b,c`"));
    let out: Vec<usize> = if let Some((a, b)) = s.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().parse().map_err(|_| bad())?;
        (a..=b).collect()
    } else {
        s.split(',')
            .map(|x| x.trim().parse().map_err(|_| bad()))
            .collect::<Result<_, _>>()?
    };
    if out.is_empty() || out.windows(2).any(|w| w[0] >= w[1]) {
        return Err(bad());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids() {
        assert_eq!(parse_grid("2..5").unwrap(), vec![2, 3, 4, 5]);
        assert_eq!(parse_grid("2..=3").unwrap(), vec![2, 3]);
        assert_eq!(parse_grid("10,20,40").unwrap(), vec![10, 20, 40]);
        assert!(parse_grid("5..2").is_err());
        assert!(parse_grid("3,3").is_err());
        assert!(parse_grid("x").is_err());
    }
}
