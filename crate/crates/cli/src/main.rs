use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use foldstab_core::{Error, ErrorCategory};

mod commands;

/// Fold Dynkin quivers, enumerate exchange graphs of hearts, classify
/// stability cells and check folded braid relations.
#[derive(Parser, Debug)]
#[command(name = "foldstab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Orbit quiver with valuation labels and folded type.
    Fold(Common),
    /// Interval exchange graph of hearts with F-stable marks.
    Eg {
        #[command(flatten)]
        common: Common,
        /// Emit the folded graph of orbit tilts (DOT) or include it (JSON).
        #[arg(long)]
        fold: bool,
    },
    /// Numerical and F-invariant feasibility of every heart's cell.
    Classify {
        #[command(flatten)]
        common: Common,
        /// Worker threads for the classification.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Folded braid relations checked through Garside normal forms.
    Braid {
        #[command(flatten)]
        common: Common,
        /// Extra relation `"w1 = w2"` to check in the ambient Artin group.
        #[arg(long)]
        check: Option<String>,
    },
    /// Everything above in one document.
    Report {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Quiver spec file (TOML).
    spec: PathBuf,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Dot,
    Json,
    Table,
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let (common, output) = match &cli.command {
        Command::Fold(c) => (c, commands::fold(&load(c)?, format(c, Format::Table))?),
        Command::Eg { common, fold } => (
            common,
            commands::eg(&load(common)?, format(common, Format::Dot), *fold)?,
        ),
        Command::Classify { common, jobs } => (
            common,
            commands::classify(&load(common)?, format(common, Format::Table), *jobs)?,
        ),
        Command::Braid { common, check } => (
            common,
            commands::braid(&load(common)?, format(common, Format::Table), check.as_deref())?,
        ),
        Command::Report { common, jobs } => (
            common,
            commands::report(&load(common)?, format(common, Format::Json), *jobs)?,
        ),
    };
    match &common.out {
        Some(p) => fs::write(p, output).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{output}"),
    }
    Ok(())
}

fn load(c: &Common) -> anyhow::Result<foldstab_core::quiver::QuiverSpec> {
    let text = fs::read_to_string(&c.spec).map_err(|e| InputError(format!("reading {}: {e}", c.spec.display())))?;
    Ok(foldstab_core::quiver::parse_quiver(&text)?)
}

fn format(c: &Common, default: Format) -> Format {
    c.format.unwrap_or(default)
}

/// Problems with the invocation itself, outside the engine.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

fn exit_code(e: &anyhow::Error) -> u8 {
    if let Some(err) = e.downcast_ref::<Error>() {
        return match err.category() {
            ErrorCategory::Input => 2,
            ErrorCategory::Unsupported => 3,
            ErrorCategory::Internal => 4,
        };
    }
    if e.downcast_ref::<InputError>().is_some() {
        return 2;
    }
    4
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
