use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use equik::involutions::{catalog_table, ActionKind, PairLabel};
use equik::kmodule::SubsetOrder;
use equik::oracle::{full_sweep, golden_su2_su3, MAX_SWEEP_RANK};
use equik::report::{run_atlas, run_compute, ComputeRequest, DEFAULT_GRADING_BOUND};
use equik::rootdata::Family;
use equik::Error;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAPACITY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "equik",
    version,
    about = "Equivariant K-theory of compact Lie groups with an involution"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the report for one group, symmetric pair and action.
    Compute {
        #[arg(long)]
        family: String,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        pair: String,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long, default_value = "gamma")]
        action: String,
        /// Highest weight degree in the rank tables.
        #[arg(long, default_value_t = DEFAULT_GRADING_BOUND)]
        bound: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// size-lex, binary or reverse-size-lex
        #[arg(long, default_value = "size-lex")]
        order: String,
    },
    /// Write one report per catalog pair and action, plus index.json.
    Atlas {
        #[arg(long, visible_alias = "bound", default_value_t = 8)]
        max_rank: usize,
        #[arg(long, default_value_t = DEFAULT_GRADING_BOUND)]
        grading_bound: usize,
        #[arg(long, env = "EQUIK_OUT_DIR", default_value = "atlas")]
        out: PathBuf,
    },
    /// Run the verification sweep and the reference examples.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=MAX_SWEEP_RANK as i64))]
        max_rank: u8,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the symmetric-pair catalog as JSON.
    Catalog {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
}

fn fail(e: &Error) -> ExitCode {
    let body = serde_json::json!({
        "error": { "kind": e.kind(), "message": e.to_string() }
    });
    eprintln!("{body}");
    ExitCode::from(if e.is_capacity() || matches!(e, Error::Io(_)) {
        EXIT_CAPACITY
    } else {
        EXIT_USAGE
    })
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Compute {
            family,
            rank,
            pair,
            p,
            q,
            action,
            bound,
            format,
            order,
        } => {
            let family: Family = family.parse()?;
            let pair: PairLabel = pair.parse()?;
            let action: ActionKind = action.parse()?;
            let mut req = ComputeRequest::new(family, rank, pair, action);
            req.p = p;
            req.q = q;
            req.grading_bound = bound;
            req.subset_order = order.parse::<SubsetOrder>()?;
            let doc = run_compute(&req)?;
            match format {
                Format::Json => print!("{}", doc.to_json_string()),
                Format::Text => print!("{}", doc.render_text()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Atlas {
            max_rank,
            grading_bound,
            out,
        } => {
            let index = run_atlas(max_rank, grading_bound, &out)?;
            println!("wrote {} reports to {}", index.files.len(), out.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { max_rank, format } => {
            let mut report = full_sweep(max_rank as usize)?;
            report.extend(golden_su2_su3(ActionKind::Gamma)?);
            let report = report.sorted();
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report.to_json()).expect("report serializes")
                ),
                Format::Text => print!("{}", report.render_text()),
            }
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VERIFY_FAILED)
            })
        }
        Command::Catalog { max_rank } => {
            println!(
                "{}",
                serde_json::to_string_pretty(&catalog_table(max_rank)).expect("catalog serializes")
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => fail(&e),
    }
}
