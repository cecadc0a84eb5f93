//! `lieindex`: Lie nilpotency indices, d-sequences and classification checks.

mod commands;
mod error;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(name = "lieindex", version, about = "Lie nilpotency indices of modular group algebras")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Worker threads for parallel steps (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,
    /// Largest group order accepted by the group-algebra oracle.
    #[arg(long, global = true, default_value_t = lieindex::algebra::DEFAULT_ALGEBRA_CAP,
          value_parser = parse_positive)]
    pub cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Lie dimension subgroups, d-sequence and t^L by the Jennings formula.
    Jennings(GroupArgs),
    /// Feasible d-sequences for t^L = p^n - k(p-1) + 1, or a scan over ranges.
    Dseq(DseqArgs),
    /// Regenerate the order-32 invariant table and diff it against a golden file.
    Table1(Table1Args),
    /// Direct computation of t_L, t^L and the dimension-subgroup identity.
    Oracle(OracleArgs),
    /// Structural profile, matched case and biconditional check for k = 14, 15.
    Classify(ClassifyArgs),
}

#[derive(Args, Debug)]
pub struct GroupArgs {
    /// Group file holding a single catalog entry.
    pub file: PathBuf,
    #[arg(short = 'p', value_parser = parse_prime)]
    pub p: u64,
}

#[derive(Args, Debug)]
pub struct DseqArgs {
    /// Prime, or with --scan a list such as `2,3,5` or a range `2-13`.
    #[arg(short = 'p')]
    pub p: String,
    /// log_p |G'|, or with --scan a list or range.
    #[arg(short = 'n')]
    pub n: String,
    /// k in t^L = p^n - k(p-1) + 1, or with --scan a list or range.
    #[arg(short = 'k', allow_hyphen_values = true, required_unless_present = "target")]
    pub k: Option<String>,
    /// Search for an explicit t^L instead of giving k.
    #[arg(long, conflicts_with_all = ["k", "scan"])]
    pub target: Option<i128>,
    /// Treat -p, -n, -k as lists or ranges and print one row per combination.
    #[arg(long)]
    pub scan: bool,
}

#[derive(Args, Debug)]
pub struct Table1Args {
    /// Catalog file (default: the bundled order-32 catalog).
    #[arg(long)]
    pub catalog: Option<PathBuf>,
    /// Golden CSV (default: the bundled transcription).
    #[arg(long)]
    pub golden: Option<PathBuf>,
    /// Flagged-cell CSV (default: the bundled flags).
    #[arg(long)]
    pub flags: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Stop after this many levels.
    #[arg(long, value_parser = parse_positive)]
    pub m_max: Option<usize>,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    #[arg(short = 'k', value_parser = clap::builder::PossibleValuesParser::new(["14", "15"]))]
    pub k: String,
    /// Catalog used to identify a nonabelian G' (default: bundled order-32 catalog).
    #[arg(long)]
    pub catalog: Option<PathBuf>,
    /// Reading of case (v) for k = 15.
    #[arg(long, value_enum, default_value_t = Reading::AsPrinted)]
    pub reading: Reading,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Reading {
    AsPrinted,
    WithGamma4Bound,
}

fn parse_positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_prime(s: &str) -> Result<u64, String> {
    let p: u64 = s.parse().map_err(|e: std::num::ParseIntError| e.to_string())?;
    if lieindex::group::is_prime(p) {
        Ok(p)
    } else {
        Err(format!("{p} is not a prime"))
    }
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t as usize)
            .build_global()
            .map_err(|e| CliError::Threads(e.to_string()))?;
    }
    let out = match &cli.command {
        Command::Jennings(a) => commands::jennings(a)?,
        Command::Dseq(a) => commands::dseq(a)?,
        Command::Table1(a) => commands::table1(a)?,
        Command::Oracle(a) => commands::oracle(a, cli.cap)?,
        Command::Classify(a) => commands::classify(a)?,
    };
    let body = match cli.format {
        Format::Text => out.text,
        Format::Json => serde_json::to_string_pretty(&out.json).expect("reports serialize") + "\n",
    };
    // A closed pipe downstream is not an error of ours.
    let _ = std::io::stdout().lock().write_all(body.as_bytes());
    Ok(out.exit)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(c) => ExitCode::from(c),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
