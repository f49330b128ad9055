//! Command-line front end: regenerate the counting tables, run the
//! formula/oracle verification suites, and apply RSK, evacuation, and
//! polarization to user-supplied inputs.
//!
//! Exit codes: 0 rendered/verified, 1 mathematical mismatch, 2 usage or
//! parse error, 3 enumeration cap exceeded.

mod apply;
mod table;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use selfevac::{crosscheck, Caps, CrossCheckReport, OracleError, RecurrenceCoefficient, VerifySuite};

#[derive(Parser)]
#[command(
    name = "selfevac",
    version,
    about = "Exact combinatorics of self-evacuated involutions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Render a counting table from formulas, oracles, or both
    Table {
        family: Family,
        /// Largest row size n
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Largest alphabet m (column range of the biword-count families)
        #[arg(long, default_value_t = 8)]
        max_m: usize,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
        /// Where the numbers come from; `both` marks disagreeing cells and
        /// exits nonzero on any disagreement
        #[arg(long, value_enum, default_value_t = Source::Formula)]
        source: Source,
        /// Enumeration caps as key=value[,key=value...]
        #[arg(long)]
        caps: Option<String>,
        /// Also write the rendered table to this path
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-verify the formulas against brute-force oracles
    Verify {
        suite: Suite,
        /// Enumeration caps as key=value[,key=value...]
        #[arg(long)]
        caps: Option<String>,
        /// Seed for the sampled property checks
        #[arg(long)]
        seed: Option<u64>,
        /// Use the printed recurrence coefficient (2n-2 with n = 2k) for the
        /// pair-free totals instead of the corrected (2k-2); demonstrably
        /// wrong, so the run exits 1 with a counterexample
        #[arg(long)]
        eq9_literal: bool,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
        /// Also write the JSON report to this path
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply one operation to an involution ("2143") or a biword
    /// ("[m=M;]x=1,1,2;y=2,1,2")
    Apply {
        operation: Operation,
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Family {
    /// Rise counts of self-evacuated involutions, rows n, columns d
    #[value(name = "S")]
    S,
    /// Rise counts of the fixed-point-free ones, even rows n
    #[value(name = "S_star")]
    SStar,
    /// Self-evacuated biword counts, rows n, columns m
    #[value(name = "c")]
    C,
    /// Even-multiplicity biword counts, even rows n, columns m
    #[value(name = "c_star")]
    CStar,
    /// Totals of self-evacuated involutions by n
    #[value(name = "s_totals")]
    STotals,
    /// Totals of the fixed-point-free ones by even n
    #[value(name = "s_star_totals")]
    SStarTotals,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Source {
    Formula,
    Oracle,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Suite {
    All,
    Formulas,
    Tableaux,
    Witnesses,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Operation {
    Rsk,
    Evacuate,
    Polarize,
    Descents,
    #[value(name = "self-evac-check")]
    SelfEvacCheck,
}

/// Failures that map onto the nonzero exit codes.
pub enum CliFailure {
    /// Formula/oracle disagreement (exit 1).
    Mismatch,
    /// Bad input or bad flag combination (exit 2).
    Usage(String),
    /// An enumeration cap was exceeded (exit 3).
    Cap(OracleError),
}

impl From<OracleError> for CliFailure {
    fn from(e: OracleError) -> Self {
        CliFailure::Cap(e)
    }
}

fn parse_caps(spec: Option<&str>, seed: Option<u64>) -> Result<Caps, CliFailure> {
    let mut caps = match spec {
        Some(s) => Caps::with_overrides(s).map_err(CliFailure::Usage)?,
        None => Caps::default(),
    };
    if let Some(seed) = seed {
        caps.seed = seed;
    }
    Ok(caps)
}

fn write_out(path: &PathBuf, content: &str) -> Result<(), CliFailure> {
    std::fs::File::create(path)
        .and_then(|mut f| f.write_all(content.as_bytes()))
        .map_err(|e| CliFailure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn render_verify(report: &CrossCheckReport, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Csv => {
            let mut out = String::from("identity,caps,status,counterexample,millis\n");
            for r in &report.records {
                let (status, cx) = match &r.status {
                    selfevac::CheckStatus::Match => ("match", String::new()),
                    selfevac::CheckStatus::Mismatch { counterexample } => (
                        "mismatch",
                        format!(
                            "{}: {} != {}",
                            counterexample.params, counterexample.lhs, counterexample.rhs
                        ),
                    ),
                };
                out.push_str(&format!(
                    "{},\"{}\",{},\"{}\",{}\n",
                    r.identity, r.caps, status, cx, r.millis
                ));
            }
            out
        }
        Format::Markdown => {
            let mut out = String::new();
            out.push_str("| identity | caps | status | counterexample | millis |\n");
            out.push_str("| --- | --- | --- | --- | --- |\n");
            for r in &report.records {
                let (status, cx) = match &r.status {
                    selfevac::CheckStatus::Match => ("match", String::new()),
                    selfevac::CheckStatus::Mismatch { counterexample } => (
                        "mismatch",
                        format!(
                            "{}: {} != {}",
                            counterexample.params, counterexample.lhs, counterexample.rhs
                        ),
                    ),
                };
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} |\n",
                    r.identity, r.caps, status, cx, r.millis
                ));
            }
            let matched = report.records.iter().filter(|r| r.status.is_match()).count();
            out.push_str(&format!(
                "\n{} of {} identities match\n",
                matched,
                report.records.len()
            ));
            out
        }
    }
}

fn run(cli: Cli) -> Result<(), CliFailure> {
    match cli.command {
        Command::Table {
            family,
            max_n,
            max_m,
            format,
            source,
            caps,
            out,
        } => {
            let caps = parse_caps(caps.as_deref(), None)?;
            let built = table::build(family, max_n, max_m, source, &caps)?;
            let rendered = table::render(&built, family, source, format);
            print!("{rendered}");
            if let Some(path) = &out {
                write_out(path, &rendered)?;
            }
            if built.any_mismatch {
                return Err(CliFailure::Mismatch);
            }
            Ok(())
        }
        Command::Verify {
            suite,
            caps,
            seed,
            eq9_literal,
            format,
            out,
        } => {
            let caps = parse_caps(caps.as_deref(), seed)?;
            let suite = match suite {
                Suite::All => VerifySuite::All,
                Suite::Formulas => VerifySuite::Formulas,
                Suite::Tableaux => VerifySuite::Tableaux,
                Suite::Witnesses => VerifySuite::Witnesses,
            };
            let coefficient = if eq9_literal {
                RecurrenceCoefficient::PrintedLiteral
            } else {
                RecurrenceCoefficient::Corrected
            };
            let report = crosscheck(suite, &caps, coefficient);
            print!("{}", render_verify(&report, format));
            if let Some(path) = &out {
                write_out(path, &report.to_json())?;
            }
            if report.all_match() {
                Ok(())
            } else {
                Err(CliFailure::Mismatch)
            }
        }
        Command::Apply {
            operation,
            input,
            format,
        } => {
            let rendered = apply::run(operation, &input, format)?;
            println!("{rendered}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliFailure::Mismatch) => ExitCode::from(1),
        Err(CliFailure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliFailure::Cap(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
