use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nonstoch_core::region::DEFAULT_BUDGET;
use nonstoch_core::{Bounds, ErrorKind, Strategy, DEFAULT_WORLD_CAP};

mod commands;
mod files;

#[derive(Debug, Parser)]
#[command(
    name = "nonstoch",
    version,
    about = "Nonstochastic information and zero-error MAC regions"
)]
struct Cli {
    /// Worker threads for region and oracle searches.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum StrategyArg {
    Auto,
    Exhaustive,
    Packing,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Strategy {
        match s {
            StrategyArg::Auto => Strategy::Auto,
            StrategyArg::Exhaustive => Strategy::Exhaustive,
            StrategyArg::Packing => Strategy::Packing,
        }
    }
}

#[derive(Debug, Args)]
pub struct WorldArgs {
    #[arg(long)]
    pub world: PathBuf,
    /// Comma-separated variable groups; `+` joins variables within a group.
    #[arg(long)]
    pub vars: String,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub channel: PathBuf,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// I*[X;Y] from the overlap partition.
    Info(WorldArgs),
    /// Conditional I*[X;Y|W].
    CondInfo {
        #[command(flatten)]
        world: WorldArgs,
        #[arg(long)]
        given: String,
    },
    /// The overlap partition [[X|Y]]*.
    Partition(WorldArgs),
    /// I*^NC[X1,X2;Y].
    NcInfo(WorldArgs),
    /// Codebook and decoder tables from a cooperation structure.
    Synthesize {
        #[arg(long)]
        channel: PathBuf,
        #[arg(long)]
        structure: PathBuf,
        #[arg(long, default_value_t = DEFAULT_WORLD_CAP)]
        world_cap: usize,
    },
    /// Exhaustive zero-error check of a code.
    Verify {
        #[arg(long)]
        channel: PathBuf,
        #[arg(long)]
        code: PathBuf,
        #[arg(long, default_value_t = DEFAULT_WORLD_CAP)]
        world_cap: usize,
    },
    /// Zero-error region through cooperation structures.
    Region {
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        max_u: Option<usize>,
        #[arg(long)]
        max_set_size: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_WORLD_CAP)]
        world_cap: usize,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
    },
    /// Zero-error region by direct code search.
    OracleRegion {
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        mu_bound: Option<usize>,
    },
    /// Largest zero-error codebook when the second input is trivial.
    SingleUser {
        #[command(flatten)]
        search: SearchArgs,
    },
}

impl Command {
    pub fn bounds(&self) -> Option<Bounds> {
        match self {
            Command::Region {
                search,
                max_u,
                max_set_size,
                world_cap,
                ..
            } => Some(Bounds {
                max_u: *max_u,
                max_set_size: *max_set_size,
                budget: search.budget,
                world_cap: *world_cap,
            }),
            _ => None,
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String, std::io::Error),
    Parse(String, serde_json::Error),
    Core(nonstoch_core::Error),
}

impl From<nonstoch_core::Error> for CliError {
    fn from(e: nonstoch_core::Error) -> CliError {
        CliError::Core(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Io(path, e) => write!(f, "{path}: {e}"),
            CliError::Parse(path, e) => write!(f, "{path}: {e}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) => match e.kind() {
                ErrorKind::Input => 1,
                ErrorKind::Budget => 2,
                ErrorKind::Internal => 3,
            },
            _ => 1,
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    if cli.threads == Some(0) {
        return Err(CliError::Usage("--threads must be positive".into()));
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads {
        builder = builder.num_threads(t);
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker threads: {e}")))?;
    let report = pool.install(|| commands::execute(&cli.command, cli.format))?;
    match &cli.output {
        Some(path) => std::fs::write(path, report).map_err(|e| CliError::Io(path.display().to_string(), e)),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(report.as_bytes())
                .map_err(|e| CliError::Io("<stdout>".into(), e))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
