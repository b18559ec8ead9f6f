use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use quadrics_cli::{run, CliError, Command, Format, MethodSel, NRange, RunConfig, EXIT_USAGE};
use quadrics_core::Cutoffs;

/// Borel-orbit counts on complete quadrics and their q-enumerators.
#[derive(Debug, Parser)]
#[command(name = "quadrics", version)]
struct Cli {
    /// Output format: text, json or csv.
    #[arg(long, global = true, default_value = "text")]
    format: Format,
    /// Largest n for exhaustive permutation scans.
    #[arg(long, global = true, default_value_t = Cutoffs::DEFAULT_PERM_SCAN)]
    cutoff_perm: usize,
    /// Largest weight for explicit tableau enumeration.
    #[arg(long, global = true, default_value_t = Cutoffs::DEFAULT_BOXES)]
    cutoff_boxes: usize,
    /// JSON file memoizing orbit counts between runs.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Sub,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// b(X_n) by one or all methods.
    Count {
        n: Option<usize>,
        #[arg(long, conflicts_with = "n")]
        range: Option<NRange>,
        /// all, compositions, skew, hermite or descents.
        #[arg(long, default_value = "all")]
        method: MethodSel,
    },
    /// B_{n,J}(q) for every J in [n-1].
    Table { n: usize },
    /// Run the verification suite.
    Verify {
        #[arg(long)]
        range: Option<NRange>,
    },
    /// Unimodality scan of B_{n,J}(q).
    Conjecture {
        n: Option<usize>,
        #[arg(long, conflicts_with = "n")]
        range: Option<NRange>,
    },
    /// First N terms of a named sequence.
    Sequence { name: String, terms: usize },
}

fn pick_range(n: Option<usize>, range: Option<NRange>) -> Result<NRange, CliError> {
    match (n, range) {
        (Some(n), None) => Ok(NRange::single(n)),
        (None, Some(r)) => Ok(r),
        _ => Err(CliError::Usage("give either N or --range".into())),
    }
}

fn config_from(cli: Cli) -> Result<RunConfig, CliError> {
    let command = match cli.command {
        Sub::Count { n, range, method } => Command::Count {
            range: pick_range(n, range)?,
            method,
        },
        Sub::Table { n } => Command::Table { n },
        Sub::Verify { range } => Command::Verify { range },
        Sub::Conjecture { n, range } => Command::Conjecture {
            range: pick_range(n, range)?,
        },
        Sub::Sequence { name, terms } => Command::Sequence { name, terms },
    };
    Ok(RunConfig {
        command,
        format: cli.format,
        cutoffs: Cutoffs {
            perm_scan: cli.cutoff_perm,
            boxes: cli.cutoff_boxes,
        },
        cache: cli.cache,
        jobs: cli.jobs,
    })
}

fn execute(cli: Cli) -> Result<quadrics_cli::Output, CliError> {
    let config = config_from(cli)?;
    config.validate()?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = config.jobs {
        pool = pool.num_threads(jobs);
    }
    let pool = pool.build().map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    pool.install(|| run(&config))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match execute(cli) {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.stdout.as_bytes());
            let _ = std::io::stderr().write_all(out.stderr.as_bytes());
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
