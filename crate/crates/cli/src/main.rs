//! `shadowsum`: evaluate shadow state sums and Wilson loop observables of
//! links in `S^2 x S^1` from JSON input files.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};
use shadowsum_core::io::{parse_input, Input};
use shadowsum_core::{Error, ErrorKind, FramingSource};

use commands::{CheckArgs, WloArgs};
use output::RunResult;

#[derive(Parser)]
#[command(name = "shadowsum", version, about = "Shadow state sums and Wilson loop observables for links in S^2 x S^1")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Level k; overrides the level stored in a link file.
    #[arg(long)]
    level: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for the state-sum kernel.
    #[arg(long)]
    threads: Option<usize>,
    /// Report wall time (makes the output run-dependent).
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Shadow state sum of a shadow file, or of a link without double points.
    Eval {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Wilson loop observable.
    Wlo {
        /// Link file; optional in vertical mode when --dims is given.
        file: Option<PathBuf>,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long, default_value_t = 0)]
        genus: u32,
        /// Representation dimensions of vertical loops, e.g. 2,3.
        #[arg(long, value_delimiter = ',')]
        dims: Vec<u32>,
        /// Source of the self-linking numbers in abelian mode.
        #[arg(long, value_enum, default_value_t = Framing::Geometric)]
        framing: Framing,
        #[command(flatten)]
        common: Common,
    },
    /// Structural checks; exit status 1 when a check fails.
    Check {
        file: PathBuf,
        #[arg(long, value_enum)]
        what: What,
        #[arg(long, default_value_t = 0)]
        genus: u32,
        /// Extra random cut angles for lem2.
        #[arg(long, default_value_t = 8)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Mode {
    Dpfree,
    Abelian,
    Vertical,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum What {
    Bijection,
    Euler,
    /// Linking numbers do not depend on the cut angle.
    Lem2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Framing {
    Geometric,
    Declared,
}

#[derive(Debug)]
pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn new(code: u8, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }

    pub fn usage(message: &str) -> Self {
        CliError::new(2, message)
    }

    pub fn precondition(message: &str) -> Self {
        CliError::new(4, message)
    }

    pub fn core(e: Error) -> Self {
        let code = match e.kind() {
            ErrorKind::Parse => 2,
            ErrorKind::Invariant => 3,
            ErrorKind::Precondition => 4,
        };
        CliError::new(code, e.to_string())
    }
}

fn read(path: &PathBuf) -> Result<(Input, String), CliError> {
    let bytes = std::fs::read(path).map_err(|e| CliError::new(2, format!("cannot read {}: {e}", path.display())))?;
    let digest = hex::encode(Sha256::digest(&bytes));
    let text = String::from_utf8(bytes).map_err(|_| CliError::new(2, "parse error: input is not UTF-8"))?;
    Ok((parse_input(&text)?, digest))
}

fn run(cli: Cli) -> Result<(RunResult, Format), CliError> {
    let common = match &cli.command {
        Command::Eval { common, .. } | Command::Wlo { common, .. } | Command::Check { common, .. } => common,
    };
    if let Some(n) = common.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::usage(&e.to_string()))?;
    }
    let start = Instant::now();
    let mut r = match &cli.command {
        Command::Eval { file, common } => {
            let (input, digest) = read(file)?;
            let mut r = RunResult::new("eval", Some(digest));
            commands::eval(input, common.level, &mut r)?;
            r
        }
        Command::Wlo {
            file,
            mode,
            genus,
            dims,
            framing,
            common,
        } => {
            let (input, digest) = match file {
                Some(f) => {
                    let (i, d) = read(f)?;
                    (Some(i), Some(d))
                }
                None => (None, None),
            };
            let mut r = RunResult::new(format!("wlo {}", mode_name(*mode)), digest);
            let args = WloArgs {
                mode: *mode,
                level: common.level,
                genus: *genus,
                dims: dims.clone(),
                framing: match framing {
                    Framing::Geometric => FramingSource::Geometric,
                    Framing::Declared => FramingSource::Declared,
                },
            };
            commands::wlo(input, &args, &mut r)?;
            r
        }
        Command::Check {
            file,
            what,
            genus,
            samples,
            seed,
            common,
        } => {
            let (input, digest) = read(file)?;
            let mut r = RunResult::new(format!("check {}", what_name(*what)), Some(digest));
            let args = CheckArgs {
                what: *what,
                level: common.level,
                genus: *genus,
                samples: *samples,
                seed: *seed,
            };
            commands::check(input, &args, &mut r)?;
            r
        }
    };
    if common.timing {
        r.wall_time_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok((r, common.format))
}

fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Dpfree => "dpfree",
        Mode::Abelian => "abelian",
        Mode::Vertical => "vertical",
    }
}

fn what_name(w: What) -> &'static str {
    match w {
        What::Bijection => "bijection",
        What::Euler => "euler",
        What::Lem2 => "lem2",
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((r, format)) => {
            let text = match format {
                Format::Text => r.to_text(),
                Format::Json => r.to_json(),
            };
            print!("{text}");
            if r.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
