use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use poincare_cli::commands::{self, PointKind};
use poincare_cli::{CliError, Document, Result};
use poincare_core::Tolerance;

/// Poincaré extension of Möbius maps: reports and SVG panels.
#[derive(Debug, Parser)]
#[command(name = "poincare", version)]
struct Args {
    /// Input document (JSON); standard input when absent or "-".
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 1e-9)]
    eps: f64,
    /// Guard band for elliptic/parabolic/hyperbolic decisions.
    #[arg(long = "eps-class", global = true, default_value_t = 1e-7)]
    eps_class: f64,
    /// Points per curve branch.
    #[arg(long, global = true, default_value_t = 512)]
    samples: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Discriminant, class, fixed points and flow times of a triple.
    Classify,
    /// Extend a triple of intervals to a point.
    Extend,
    /// Closed-form point of two intervals.
    Point {
        #[arg(value_enum)]
        kind: PointKind,
        #[arg(allow_negative_numbers = true, num_args = 4, value_names = ["X", "Y", "X2", "Y2"])]
        values: Vec<f64>,
    },
    /// Render a scene as SVG.
    Plot,
    /// Iwasawa factors of [[a, b], [c, d]].
    Iwasawa {
        #[arg(allow_negative_numbers = true, num_args = 4, value_names = ["A", "B", "C", "D"])]
        values: Vec<f64>,
    },
    /// Common points of two cycles.
    CommonPoints,
}

fn read_document(path: Option<&PathBuf>) -> Result<Document> {
    let text = match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|source| CliError::Io { path: p.display().to_string(), source })?
        }
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|source| CliError::Io { path: "<stdin>".into(), source })?;
            s
        }
    };
    Document::parse(&text)
}

fn four(values: &[f64]) -> [f64; 4] {
    [values[0], values[1], values[2], values[3]]
}

fn run(args: &Args) -> Result<()> {
    if !(args.eps > 0.0 && args.eps_class > 0.0) {
        return Err(CliError::schema("tolerances must be positive"));
    }
    let tol = Tolerance::new(args.eps, args.eps_class);
    let doc = || read_document(args.input.as_ref());
    let text = match &args.command {
        Command::Classify => commands::classify(&doc()?, tol)?,
        Command::Extend => commands::extend(&doc()?, tol)?,
        Command::Point { kind, values } => commands::closed_point(*kind, four(values))?,
        Command::Plot => commands::plot(&doc()?, tol, args.samples)?,
        Command::Iwasawa { values } => commands::iwasawa(four(values))?,
        Command::CommonPoints => commands::common(&doc()?, tol)?,
    };
    match &args.out {
        Some(p) => {
            let text = if text.ends_with('\n') { text } else { text + "\n" };
            fs::write(p, text).map_err(|source| CliError::Io { path: p.display().to_string(), source })
        }
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
