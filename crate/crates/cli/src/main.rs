//! `quadmap`: censuses of unrooted complete maps, verification runs, map
//! isomorphism and automorphism queries, stable-map witnesses and catalogs.

mod census;
mod maps;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quadmap::{BetaVariant, Method, SurfaceKind};

/// Exit codes: 0 ok, 1 a verification check failed, 2 bad flags or input,
/// 3 budget exceeded, 4 a count that is not an integer (report still printed).
#[derive(Debug)]
pub enum Failure {
    Verify(String),
    Input(String),
    Budget(String),
    NonInteger(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verify(_) => 1,
            Failure::Input(_) => 2,
            Failure::Budget(_) => 3,
            Failure::NonInteger(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verify(m) | Failure::Input(m) | Failure::Budget(m) | Failure::NonInteger(m) => m,
        }
    }
}

pub type CliResult = Result<(), Failure>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(name = "quadmap", version, about = "Unrooted maps of complete graphs on surfaces")]
struct Cli {
    /// Worker threads for census and class work.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count unrooted embeddings of K_n.
    Census(CensusArgs),
    /// Run the cross-checks and report pass/fail per check.
    Verify(VerifyArgs),
    /// Look for an isomorphism between two maps.
    Iso(IsoArgs),
    /// Automorphism group of a map.
    Aut(AutArgs),
    /// A map of K_n stable under a given class, with a stability certificate.
    Witness(WitnessArgs),
    /// One map file per isomorphism class of embeddings of K_n.
    Catalog(CatalogArgs),
    /// Turn a `kn v1` embedding code into a `map v1` record.
    Decode(DecodeArgs),
}

#[derive(Args, Debug)]
pub struct CensusArgs {
    #[arg(long)]
    pub n: usize,
    /// orientable, non-orientable or locally-orientable.
    #[arg(long, default_value = "locally-orientable")]
    pub kind: SurfaceKind,
    /// formula, burnside or orbit.
    #[arg(long, default_value = "formula")]
    pub method: Method,
    /// statement or proof reading of the odd beta exponent.
    #[arg(long, default_value = "proof")]
    pub beta_variant: BetaVariant,
    /// Where Burnside takes fixed counts from.
    #[arg(long, value_enum, default_value_t = Source::Dfs)]
    pub source: Source,
    /// Lift the enumeration budget.
    #[arg(long)]
    pub long_run: bool,
    /// Largest carrier an orbit count may enumerate without --long-run.
    #[arg(long, default_value_t = quadmap::census::DEFAULT_ORBIT_BUDGET)]
    pub budget: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Source {
    Dfs,
    Formula,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Level {
    Quick,
    Standard,
    Full,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Level::Quick)]
    pub level: Level,
    /// Also count the fixed maps of [1,3,3] at n = 7 and name the matching
    /// beta reading.
    #[arg(long)]
    pub adjudicate_beta: bool,
    /// Seed for the sampled checks.
    #[arg(long, default_value_t = 20_240_601)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Preserving,
    Reversing,
    Either,
}

#[derive(Args, Debug)]
pub struct IsoArgs {
    pub first: PathBuf,
    pub second: PathBuf,
    #[arg(long, value_enum, default_value_t = ModeArg::Either)]
    pub mode: ModeArg,
}

#[derive(Args, Debug)]
pub struct AutArgs {
    pub file: PathBuf,
}

#[derive(Args, Debug)]
pub struct WitnessArgs {
    #[arg(long)]
    pub n: usize,
    /// Cycle type as comma-separated parts, e.g. `1,1,2`.
    #[arg(long)]
    pub class: String,
    /// Compose the vertex permutation with alpha.
    #[arg(long)]
    pub reversing: bool,
    #[arg(long, default_value = "locally-orientable")]
    pub kind: SurfaceKind,
    /// Write the map file here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CatalogArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "locally-orientable")]
    pub kind: SurfaceKind,
    #[arg(long, default_value = "catalog")]
    pub out_dir: PathBuf,
    #[arg(long)]
    pub long_run: bool,
    #[arg(long, default_value_t = quadmap::census::DEFAULT_ORBIT_BUDGET)]
    pub budget: u64,
}

#[derive(Args, Debug)]
pub struct DecodeArgs {
    /// Code text, or a path to a file holding it.
    pub code: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.max(1)).build_global() {
        eprintln!("error: cannot start worker pool: {e}");
        return ExitCode::from(2);
    }
    let result = match &cli.command {
        Command::Census(a) => census::run(a, cli.format),
        Command::Verify(a) => verify::run(a, cli.format),
        Command::Iso(a) => maps::iso(a, cli.format),
        Command::Aut(a) => maps::aut(a, cli.format),
        Command::Witness(a) => maps::witness(a, cli.format),
        Command::Catalog(a) => maps::catalog(a, cli.format),
        Command::Decode(a) => maps::decode(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
