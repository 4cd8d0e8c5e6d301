use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use tensorq::{
    cmd_build, cmd_compare, cmd_decode_sim, cmd_distance, cmd_table, cmd_verify, exit_code, Output, SimOptions,
    DEFAULT_DISTANCE_BUDGET, DEFAULT_SIM_BUDGET, EXIT_USAGE,
};
use tensorq_core::tpc::Variant;
use tensorq_core::{Error, Result};

#[derive(Parser)]
#[command(name = "tensorq", version, about = "Quantum tensor product codes: build, verify, compare, simulate")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a code from a JSON spec and write its artifact.
    Build {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Tensor product form: psi, companion or companion_t.
        #[arg(long)]
        variant: Option<String>,
    },
    /// Re-check an artifact's invariants.
    Verify {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimum distance of a code spec or artifact.
    Distance {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_DISTANCE_BUDGET)]
        budget: u64,
        #[arg(long)]
        variant: Option<String>,
    },
    /// Parameter table of tensor product codes against concatenated codes.
    Table {
        /// JSON request {"rows": [{"m", "delta", "eta1", "eta2", "n2": [...]}]}.
        #[arg(long)]
        spec: Option<PathBuf>,
        /// Outer length for every default row.
        #[arg(long)]
        n2: Option<u64>,
        /// JSON, or CSV when the name ends in .csv.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare one parameter choice: {"m", "delta", "eta1", "eta2", "n2"}.
    Compare {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Burst decoding simulation on a burst-correcting code.
    DecodeSim {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = DEFAULT_SIM_BUDGET)]
        budget: u64,
        /// Number of bursts (default: the code's claim).
        #[arg(long)]
        t: Option<usize>,
        /// Burst length (default: the code's claim).
        #[arg(long)]
        l: Option<usize>,
        /// Per-t success rates as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn read(p: &Path) -> Result<String> {
    fs::read_to_string(p).map_err(|e| Error::Usage(format!("cannot read {}: {e}", p.display())))
}

fn write(p: &Path, s: &str) -> Result<()> {
    fs::write(p, s).map_err(|e| Error::Usage(format!("cannot write {}: {e}", p.display())))
}

fn variant(v: &Option<String>) -> Result<Option<Variant>> {
    v.as_deref().map(Variant::parse).transpose()
}

fn emit(o: Output, out: &Option<PathBuf>, echo_document: bool) -> Result<i32> {
    print!("{}", o.text);
    match out {
        Some(p) => write(p, &o.document)?,
        None if echo_document => print!("{}", o.document),
        None => {}
    }
    Ok(o.code)
}

fn run(cli: Cli) -> Result<i32> {
    match cli.cmd {
        Cmd::Build { spec, out, variant: v } => emit(cmd_build(&read(&spec)?, variant(&v)?)?, &out, true),
        Cmd::Verify { spec, out } => emit(cmd_verify(&read(&spec)?)?, &out, false),
        Cmd::Distance { spec, out, budget, variant: v } => {
            emit(cmd_distance(&read(&spec)?, variant(&v)?, budget)?, &out, false)
        }
        Cmd::Table { spec, n2, out } => {
            let req = spec.as_deref().map(read).transpose()?;
            let csv = out.as_ref().is_some_and(|p| p.extension().is_some_and(|e| e == "csv"));
            emit(cmd_table(req.as_deref(), n2, csv)?, &out, false)
        }
        Cmd::Compare { spec, out } => emit(cmd_compare(&read(&spec)?)?, &out, false),
        Cmd::DecodeSim { spec, out, seed, trials, budget, t, l, csv } => {
            let opt = SimOptions { t, l, trials, seed, budget, sweep: csv.is_some() };
            let (o, table) = cmd_decode_sim(&read(&spec)?, &opt)?;
            if let (Some(p), Some(s)) = (&csv, &table) {
                write(p, s)?;
            }
            emit(o, &out, true)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            return ExitCode::from(code as u8);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
