use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};

use twin_cli::config::{Suite, SuiteConfig};
use twin_cli::{replay, run_suite, Status};

/// Twin suites: builder guarantees, exact tables, construction checks and probes.
#[derive(Parser)]
#[command(name = "twin", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// JSON suite configuration; defaults to the suite's built-in grid.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Master seed, overriding the configuration.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output directory (default: $TWIN_OUT_DIR, then ./twin-out).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Re-run one case by id instead of the whole suite.
    #[arg(long, global = true)]
    replay: Option<String>,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// Builder guarantees on seeded random colorings.
    Guarantees,
    /// Exhaustive extremal tables.
    Tables,
    /// Composite construction twin bound and decompositions.
    Twinbound,
    /// LCS tail probe on random permutation pairs.
    LcsTail,
    /// Structural claims on block colorings.
    Blockclaims,
    /// Re-run the case given by --replay.
    Replay,
}

impl Command {
    fn suite(self) -> Option<Suite> {
        match self {
            Command::Guarantees => Some(Suite::Guarantees),
            Command::Tables => Some(Suite::Tables),
            Command::Twinbound => Some(Suite::Twinbound),
            Command::LcsTail => Some(Suite::LcsTail),
            Command::Blockclaims => Some(Suite::Blockclaims),
            Command::Replay => None,
        }
    }
}

fn load_config(cli: &Cli, suite: Option<Suite>) -> anyhow::Result<SuiteConfig> {
    let mut config = match &cli.config {
        Some(path) => SuiteConfig::from_json_file(path).with_context(|| format!("reading {}", path.display()))?,
        None => SuiteConfig::defaults(suite.unwrap_or(Suite::Guarantees)),
    };
    if let Some(suite) = suite {
        if config.suite != suite {
            bail!("config is for suite `{}` but `{}` was requested", config.suite.name(), suite.name());
        }
    }
    if let Some(seed) = cli.seed {
        config.seed = seed;
    }
    Ok(config)
}

fn run(cli: &Cli) -> anyhow::Result<bool> {
    let suite = cli.command.suite();
    if let Some(id) = &cli.replay {
        let config = load_config(cli, None)?;
        let record = replay(id, &config.budgets)?;
        println!("{}", serde_json::to_string_pretty(&record)?);
        return Ok(record.status != Status::Fail);
    }
    let Some(suite) = suite else {
        bail!("`twin replay` needs --replay <case-id>");
    };
    let config = load_config(cli, Some(suite))?;
    let report = run_suite(&config, cli.jobs)?;
    let dir = config.resolve_out_dir(cli.out.as_deref()).join(suite.name());
    report.write_to(&dir).with_context(|| format!("writing reports to {}", dir.display()))?;
    print!("{}", report.summary());
    println!("reports written to {}", dir.display());
    Ok(!report.has_failures())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
