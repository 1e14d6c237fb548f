//! hopfcalc: construct exact Hopf algebras over cyclotomic fields and run
//! the structural verification pipeline on interchange files.
//!
//! Exit codes: 0 = all checks passed (skips allowed), 1 = at least one
//! mathematical check failed, 2 = input or usage error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hopfcalc_core::constructions::{drinfeld_double, group_algebra, taft};
use hopfcalc_core::interchange;
use hopfcalc_core::pipeline::run_verification;
use hopfcalc_core::report::{CheckStatus, ReportDocument};

#[derive(Parser)]
#[command(name = "hopfcalc", version, about = "Exact finite-dimensional Hopf algebra calculator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an algebra and write it as an interchange file.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Run the verification pipeline on an interchange file.
    Verify(VerifyArgs),
    /// Render a verification report as a table.
    Summary {
        /// Report file produced by `verify`.
        report: PathBuf,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Group algebra of a finite abelian group.
    Group {
        /// Invariant factors, comma separated (e.g. 3,3).
        #[arg(long, value_delimiter = ',', required = true)]
        factors: Vec<u32>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Taft algebra T(ξ) with ξ = ζ_n^e primitive.
    Taft {
        #[arg(long)]
        n: u32,
        #[arg(long = "xi-exponent", default_value_t = 1)]
        xi_exponent: u32,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Drinfeld double of an algebra read from an interchange file.
    Double {
        #[arg(long)]
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Interchange file to verify.
    input: PathBuf,
    /// Where to write the verification report (JSON). The file is
    /// rewritten after every pipeline stage, so partial runs leave
    /// evidence.
    #[arg(short, long)]
    report: Option<PathBuf>,
    /// Comma-separated check-id prefixes to keep (e.g. "lemma-4,radford").
    #[arg(long)]
    checks: Option<String>,
    /// Widen the scalar field to Q(ζ_N) before verifying.
    #[arg(long = "cyclotomic-order")]
    cyclotomic_order: Option<u32>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Construct { kind } => {
            let (algebra, output) = match kind {
                ConstructKind::Group { factors, output } => (
                    group_algebra(&factors).map_err(|e| e.to_string())?,
                    output,
                ),
                ConstructKind::Taft {
                    n,
                    xi_exponent,
                    output,
                } => (taft(n, xi_exponent).map_err(|e| e.to_string())?, output),
                ConstructKind::Double { input, output } => {
                    let h = interchange::read_file(&input).map_err(|e| e.to_string())?;
                    (drinfeld_double(&h).map_err(|e| e.to_string())?, output)
                }
            };
            interchange::write_file(&algebra, &output).map_err(|e| e.to_string())?;
            println!(
                "wrote {} (dim {}, Q(zeta_{})) to {}",
                algebra.name(),
                algebra.dim(),
                algebra.cyc_order(),
                output.display()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => verify(args),
        Command::Summary { report } => summary(&report),
    }
}

fn verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let mut h = interchange::read_file(&args.input).map_err(|e| e.to_string())?;
    if let Some(order) = args.cyclotomic_order {
        if order % h.cyc_order() != 0 {
            return Err(format!(
                "--cyclotomic-order {order} is not a multiple of the file's order {}",
                h.cyc_order()
            ));
        }
        h = h.coerce_order(order).map_err(|e| e.to_string())?;
    }
    let report_path = args.report.clone();
    let write_stage = |doc: &ReportDocument| {
        if let Some(path) = &report_path {
            if let Ok(bytes) = serde_json::to_vec_pretty(doc) {
                let _ = std::fs::write(path, bytes);
            }
        }
    };
    let mut outcome = run_verification(&h, write_stage);

    if let Some(filter) = &args.checks {
        let prefixes: Vec<&str> = filter.split(',').map(str::trim).collect();
        outcome
            .document
            .checks
            .retain(|e| prefixes.iter().any(|p| e.id.starts_with(p)));
        outcome.failed = outcome
            .document
            .checks
            .iter()
            .any(|e| e.status == CheckStatus::Fail);
    }
    if let Some(path) = &args.report {
        let bytes = serde_json::to_vec_pretty(&outcome.document).map_err(|e| e.to_string())?;
        std::fs::write(path, bytes).map_err(|e| e.to_string())?;
    }
    print_checks(&outcome.document);
    Ok(if outcome.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn summary(path: &Path) -> Result<ExitCode, String> {
    let bytes = std::fs::read(path).map_err(|e| e.to_string())?;
    let doc: ReportDocument = serde_json::from_slice(&bytes).map_err(|e| e.to_string())?;
    println!(
        "{} (dim {}, Q(zeta_{}))",
        doc.algebra, doc.dim, doc.cyclotomic_order
    );
    print_checks(&doc);
    if let Some(grading) = &doc.grading {
        let n = grading.index;
        println!();
        println!("grading table (index {n}, x = {}):", grading.x);
        for a in 0..2u8 {
            println!("  a = {a}:");
            for i in 0..n {
                let row: Vec<String> = (0..n)
                    .map(|j| {
                        grading
                            .cells
                            .iter()
                            .find(|c| c.a == a && c.i == i && c.j == j)
                            .map(|c| c.dim.to_string())
                            .unwrap_or_else(|| "?".into())
                    })
                    .collect();
                println!("    i={i}: [{}]", row.join(", "));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_checks(doc: &ReportDocument) {
    for e in &doc.checks {
        let status = match e.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skipped => "skip",
        };
        let mut line = format!("{status:5} {}", e.id);
        if let Some(reason) = &e.reason {
            line.push_str(&format!("  — {reason}"));
        }
        println!("{line}");
        if e.status == CheckStatus::Fail {
            if let Some(w) = &e.witness {
                println!("      witness: {w}");
            }
        }
    }
}
