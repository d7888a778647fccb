use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use goodmap_cli::{render, run, JobKind, JobSpec, DEFAULT_SEED, EXIT_INPUT};

/// Good-map checkers for finite spaces and Chevalley images of polynomial maps.
#[derive(Parser)]
#[command(name = "goodmap", version)]
struct Cli {
    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Point cap for the finite checkers (default 16); for `proptest`, the
    /// exhaustive sweep size (default 3, sampled at one more point).
    #[arg(long, global = true)]
    size_cap: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Add wall-clock `timing_ms` to the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Decide goodness of a finite map file.
    CheckGood { map: PathBuf },
    /// Decide weak goodness of a finite map file.
    CheckWeakGood { map: PathBuf },
    /// Decide constructibility of a subset file.
    CheckConstructible { subset: PathBuf },
    /// Image of the source strata under a polynomial map.
    Image { map: PathBuf },
    /// Certified good-map witness for a single source stratum.
    GoodWitness { map: PathBuf },
    /// Run the seeded invariant sweep, or replay a counterexample file.
    Proptest {
        #[arg(long)]
        replay: Option<PathBuf>,
        /// Directory for counterexample files.
        #[arg(long, default_value = "goodmap-counterexamples")]
        counterexample_dir: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Format::Json = cli.format;
    let (kind, input, dir) = match cli.command {
        Command::CheckGood { map } => (JobKind::CheckGood, Some(map), None),
        Command::CheckWeakGood { map } => (JobKind::CheckWeakGood, Some(map), None),
        Command::CheckConstructible { subset } => (JobKind::CheckConstructible, Some(subset), None),
        Command::Image { map } => (JobKind::Image, Some(map), None),
        Command::GoodWitness { map } => (JobKind::GoodWitness, Some(map), None),
        Command::Proptest {
            replay,
            counterexample_dir,
        } => (JobKind::Proptest, replay, Some(counterexample_dir)),
    };
    let mut job = JobSpec::new(kind, input);
    job.seed = cli.seed;
    job.size_cap = cli.size_cap;
    job.counterexample_dir = dir;
    job.timing = cli.timing;

    let outcome = match run(&job) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("goodmap: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let text = render(&outcome.report);
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("goodmap: {e}");
        return ExitCode::from(EXIT_INPUT as u8);
    }
    ExitCode::from(outcome.exit_code as u8)
}
