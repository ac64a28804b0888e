mod cache;
mod commands;
mod config;
mod failure;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use partition_minors::lab::DEFAULT_CEILING;
use partition_minors::sonar::ESequence;
use partition_minors::Partition;

use crate::commands::{GnRange, Report};
use crate::config::{Config, Format};
use crate::failure::Failure;
use crate::verify::Suite;

#[derive(Parser, Debug)]
#[command(name = "pminor", version, about = "Partition minors, skew tableau counts and reconstruction")]
struct Cli {
    /// Directory for the persistent skew-count cache.
    #[arg(long, env = "PMINOR_CACHE_DIR", global = true)]
    cache_dir: Option<PathBuf>,

    /// Worker threads for `gn` and `mrc` (default: available cores).
    #[arg(long, env = "PMINOR_WORKERS", global = true)]
    workers: Option<usize>,

    /// Output format.
    #[arg(long, env = "PMINOR_FORMAT", global = true, value_enum, default_value = "text")]
    format: Format,

    /// Largest p(n)*p(d) attempted exhaustively.
    #[arg(long, env = "PMINOR_CEILING", global = true, default_value_t = DEFAULT_CEILING)]
    ceiling: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Naruse,
    Dp,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the hook length of every cell, row by row.
    Hooks { partition: Partition },
    /// Count standard Young tableaux of OUTER or of OUTER/INNER.
    Count {
        outer: Partition,
        inner: Option<Partition>,
        #[arg(long, value_enum, default_value = "naruse")]
        method: Method,
    },
    /// Excitation factor of INNER inside OUTER.
    Excite {
        outer: Partition,
        inner: Partition,
        /// Also list every excited diagram.
        #[arg(long)]
        list: bool,
    },
    /// Recover a partition from a comma-separated E-sequence such as 1,8,28,40.
    Sonar { sequence: ESequence },
    /// Reconstruct a hidden partition from budgeted skew-count queries.
    Reconstruct {
        hidden: Partition,
        #[arg(long)]
        show_queries: bool,
    },
    /// Print the multiset of K-minors of a partition with multiplicities.
    Minors {
        partition: Partition,
        k: usize,
        #[arg(long, value_enum, default_value = "naruse")]
        method: Method,
    },
    /// Decide whether K-minor multisets separate the partitions of N.
    Mrc { n: usize, k: usize },
    /// Tabulate G(n) for N or an inclusive range A-B.
    Gn {
        range: GnRange,
        /// Append a pair sharing its (G+1)-minor multiset.
        #[arg(long)]
        witness: bool,
    },
    /// Build the conjugate-pair family member for R, U and a self-conjugate RHO.
    Family {
        r: usize,
        u: usize,
        #[arg(default_value = "[]")]
        rho: Partition,
    },
    /// Run an identity or verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
}

fn run(cli: Cli) -> anyhow::Result<Report> {
    let config = Config::new(cli.cache_dir, cli.workers, cli.ceiling)?;
    match cli.command {
        Command::Hooks { partition } => Ok(commands::hooks(&partition)),
        Command::Count { outer, inner, method } => commands::count(&config, &outer, inner.as_ref(), method),
        Command::Excite { outer, inner, list } => commands::excite(&outer, &inner, list),
        Command::Sonar { sequence } => commands::sonar(&sequence),
        Command::Reconstruct { hidden, show_queries } => commands::reconstruct(&hidden, show_queries),
        Command::Minors { partition, k, method } => commands::minors(&config, &partition, k, method),
        Command::Mrc { n, k } => commands::mrc(&config, n, k),
        Command::Gn { range, witness } => commands::gn(&config, range, witness),
        Command::Family { r, u, rho } => commands::family(r, u, &rho),
        Command::Verify { suite } => Ok(commands::verify(suite)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(report) => {
            print!("{}", report.render(format));
            if let Some(message) = &report.failure {
                eprintln!("pminor: {message}");
            }
            ExitCode::from(report.code)
        }
        Err(err) => {
            let code = err.downcast_ref::<Failure>().map_or(failure::USAGE, |f| f.code);
            eprintln!("pminor: {err:#}");
            ExitCode::from(code)
        }
    }
}
