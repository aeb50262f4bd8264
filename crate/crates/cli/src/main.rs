use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gf3lie::divided_power::DividedPowerAlgebra;
use gf3lie::error::Error;
use gf3lie::{frank, jternary, witt_contact};
use gf3lie_cli::claims::{self, RunConfig, DEFAULT_SAMPLES};
use gf3lie_cli::format;
use gf3lie_cli::report::{self, overall_status, ClaimReport};

#[derive(Parser)]
#[command(name = "gf3lie", version, about = "Exact computations with modular Lie algebras over GF(3)")]
struct Cli {
    /// Print the registered claim ids and exit.
    #[arg(long)]
    list_claims: bool,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Dump the structure constants of a named algebra.
    Build {
        #[arg(value_enum)]
        algebra: AlgebraName,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=3))]
        n: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a single claim.
    Verify {
        claim: String,
        #[command(flatten)]
        opts: RunOpts,
    },
    /// Check every claim.
    Report {
        #[command(flatten)]
        opts: RunOpts,
    },
}

#[derive(Args)]
struct RunOpts {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=3))]
    n: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraName {
    O,
    Witt,
    Frank,
    ContactK,
    ContactPresentation,
    Jternary,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("cannot write {}: {}", path.display(), e)),
        None => {
            print!("{}", text);
            Ok(())
        }
    }
}

fn build_text(algebra: AlgebraName, n: u32) -> Result<String, Error> {
    Ok(match algebra {
        AlgebraName::O => {
            format::algebra_text(&DividedPowerAlgebra::new(n)?.to_structure_algebra())
        }
        AlgebraName::Witt => format::algebra_text(&witt_contact::build_witt(n)?),
        AlgebraName::Frank => format::algebra_text(frank::build_frank(n)?.algebra()),
        AlgebraName::ContactK => format::algebra_text(&witt_contact::build_contact_k(n)?),
        AlgebraName::ContactPresentation => {
            format::algebra_text(&witt_contact::build_contact_presentation(n, false)?)
        }
        AlgebraName::Jternary => format::jternary_text(&jternary::build_o_jternary(n)?),
    })
}

fn render(reports: &[ClaimReport], opts: &RunOpts) -> Result<ExitCode, String> {
    let text = match opts.format {
        OutputFormat::Text => report::to_text(reports),
        OutputFormat::Json => report::to_json(reports),
    };
    emit(&text, opts.out.as_ref())?;
    Ok(ExitCode::from(overall_status(reports).exit_code() as u8))
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    if cli.list_claims {
        for c in claims::registry() {
            println!("{}\t{}", c.id, c.anchor);
        }
        return Ok(ExitCode::SUCCESS);
    }
    match cli.command {
        None => Err("no command given; see --help".into()),
        Some(Command::Build { algebra, n, out }) => {
            let text = build_text(algebra, n).map_err(|e| e.to_string())?;
            emit(&text, out.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Some(Command::Verify { claim, opts }) => {
            let claim = claims::find(&claim).ok_or_else(|| format!("unknown claim '{}'", claim))?;
            let config = RunConfig { n: opts.n, seed: opts.seed, samples: opts.samples };
            render(&[claims::run_claim(&claim, &config)], &opts)
        }
        Some(Command::Report { opts }) => {
            let config = RunConfig { n: opts.n, seed: opts.seed, samples: opts.samples };
            render(&claims::run_all(&config), &opts)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("gf3lie: {}", msg);
            ExitCode::from(2)
        }
    }
}
