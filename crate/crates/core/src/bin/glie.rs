use std::process::ExitCode;

use clap::{Parser, Subcommand};
use glie::presentations::PresentationKind;
use glie::table::{OutputFormat, TableDocument};
use glie::verify::{run_check, CheckName};

#[derive(Parser)]
#[command(name = "glie", version, about = "Graded Lie rings of braid and mapping class groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Free rank and torsion of each graded component.
    Table {
        #[arg(long)]
        presentation: PresentationKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        #[arg(long, default_value = "text")]
        format: OutputFormat,
        /// Include per-degree timing in JSON output.
        #[arg(long)]
        timing: bool,
    },
    /// Run a named check; exits 1 if any instance fails.
    Verify {
        #[arg(value_name = "CHECK", required_unless_present = "check")]
        name: Option<CheckName>,
        #[arg(long, conflicts_with = "name")]
        check: Option<CheckName>,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    ListPresentations,
}

fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var("GLIE_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| format!("GLIE_THREADS must be a positive integer, got '{value}'"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    match cli.command {
        Command::Table {
            presentation,
            n,
            max_degree,
            format,
            timing,
        } => match TableDocument::compute(presentation, n, max_degree) {
            Ok(doc) => {
                let doc = if timing || format == OutputFormat::Text {
                    doc
                } else {
                    doc.without_timing()
                };
                print!("{}", doc.render(format));
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Command::Verify {
            name,
            check,
            n,
            max_degree,
        } => {
            let check = name.or(check).expect("clap requires one");
            match run_check(check, n, max_degree) {
                Ok(report) => {
                    println!("{report}");
                    if report.passed() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Command::ListPresentations => {
            for kind in PresentationKind::ALL {
                println!("{:<16} n >= {}  {}", kind.name(), kind.min_points(), kind.description());
            }
            ExitCode::SUCCESS
        }
    }
}
