//! The `closure-ops` command line.
//!
//! Exit codes: `0` success, `1` a mathematical check failed (a report with
//! the witness is still written), `2` malformed input or usage error.
//! Data goes to `--output` or standard output; diagnostics go to standard
//! error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::closure::ClosureOperator;
use crate::error::{Error, Result};
use crate::generators::intersect_generate;
use crate::json::{self, GeneratorsDoc, LabelingDoc, PreferenceDoc, TableDoc};
use crate::labeling::classifier_from_labeling;
use crate::reports::{self, DecompositionKind, LabelingKind, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "closure-ops",
    version,
    about = "Finite closure operators and their decompositions"
)]
struct Cli {
    /// Write data here instead of standard output.
    #[arg(short, long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    WeakOrders,
    Binary,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Style {
    Kreps,
    Additive,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the closure axioms on an operator table.
    Validate {
        #[arg(long, value_name = "FILE")]
        table: PathBuf,
    },
    /// Emit the closed sets of an operator given as a table, a labeling or
    /// a list of generators.
    #[command(group(ArgGroup::new("source").required(true).multiple(false)))]
    Topology {
        #[arg(long, value_name = "FILE", group = "source")]
        from_table: Option<PathBuf>,
        #[arg(long, value_name = "FILE", group = "source")]
        from_labels: Option<PathBuf>,
        #[arg(long, value_name = "FILE", group = "source")]
        from_generators: Option<PathBuf>,
    },
    /// MNWO, MNBC, P(f), B(f), width and depth.
    Complexity {
        #[arg(long, value_name = "FILE")]
        topology: PathBuf,
    },
    /// A verified minimum list of generators.
    Decompose {
        #[arg(long, value_name = "FILE")]
        topology: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// The canonical or the minimal labeling of an operator.
    #[command(group(ArgGroup::new("which").required(true).multiple(false)))]
    Labels {
        #[arg(long, value_name = "FILE")]
        topology: PathBuf,
        #[arg(long, group = "which")]
        minimal: bool,
        #[arg(long, group = "which")]
        canonical: bool,
    },
    /// Represent a menu preference with subjective states.
    MenuRep {
        #[arg(long, value_name = "FILE")]
        preference: PathBuf,
        #[arg(long, value_enum)]
        style: Style,
        /// Operator for the additive style; defaults to the identity.
        #[arg(long, value_name = "FILE")]
        operator: Option<PathBuf>,
    },
    /// Nonzero Möbius values of the closed sets under inclusion.
    Mobius {
        #[arg(long, value_name = "FILE")]
        topology: PathBuf,
    },
    /// Hasse diagram of the closed sets, as JSON or DOT.
    Hasse {
        #[arg(long, value_name = "FILE")]
        topology: PathBuf,
        #[arg(long)]
        dot: bool,
    },
}

/// Parses `args` (program name first) and runs one subcommand.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_MALFORMED
            } else {
                EXIT_OK
            };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };

    let report = match execute(&cli.command) {
        Ok(report) => report,
        Err(e) => match reports::failure_report(&e) {
            Some(report) => {
                let _ = writeln!(stderr, "check failed: {e}");
                report
            }
            None => {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_MALFORMED;
            }
        },
    };
    if !report.holds {
        let _ = writeln!(
            stderr,
            "check failed; see the verification fields of the report"
        );
    }

    let written = match &cli.output {
        Some(path) => std::fs::write(path, &report.text),
        None => stdout.write_all(report.text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return EXIT_MALFORMED;
    }
    if report.holds {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn read_value(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Document(format!("cannot read {}: {e}", path.display())))?;
    Ok(serde_json::from_str(&text)?)
}

fn read_doc<T: for<'de> serde::Deserialize<'de>>(path: &Path) -> Result<T> {
    Ok(serde_json::from_value(read_value(path)?)?)
}

fn read_operator(path: &Path) -> Result<ClosureOperator> {
    json::operator_from_value(&read_value(path)?)
}

fn execute(command: &Command) -> Result<Report> {
    match command {
        Command::Validate { table } => {
            let doc: TableDoc = read_doc(table)?;
            Ok(reports::validation(&doc.to_table()?))
        }
        Command::Topology {
            from_table,
            from_labels,
            from_generators,
        } => {
            let op = if let Some(p) = from_table {
                let doc: TableDoc = read_doc(p)?;
                ClosureOperator::from_table(doc.to_table()?)?
            } else if let Some(p) = from_labels {
                let doc: LabelingDoc = read_doc(p)?;
                classifier_from_labeling(&doc.to_labeling()?)
            } else if let Some(p) = from_generators {
                let doc: GeneratorsDoc = read_doc(p)?;
                let (_, ops) = doc.to_operators()?;
                intersect_generate(&ops)?
            } else {
                unreachable!("clap enforces one source")
            };
            Ok(reports::topology(&op))
        }
        Command::Complexity { topology } => reports::complexity(&read_operator(topology)?),
        Command::Decompose { topology, kind } => {
            let kind = match kind {
                Kind::WeakOrders => DecompositionKind::WeakOrders,
                Kind::Binary => DecompositionKind::Binary,
            };
            reports::decomposition(&read_operator(topology)?, kind)
        }
        Command::Labels {
            topology, minimal, ..
        } => {
            let kind = if *minimal {
                LabelingKind::Minimal
            } else {
                LabelingKind::Canonical
            };
            Ok(reports::labeling(&read_operator(topology)?, kind))
        }
        Command::MenuRep {
            preference,
            style,
            operator,
        } => {
            let doc: PreferenceDoc = read_doc(preference)?;
            let pref = doc.to_preference()?;
            match style {
                Style::Kreps => {
                    if operator.is_some() {
                        return Err(Error::Document(
                            "--operator applies to the additive style only; the Kreps style derives its operator"
                                .into(),
                        ));
                    }
                    reports::kreps(&pref)
                }
                Style::Additive => {
                    let f = match operator {
                        Some(p) => read_operator(p)?,
                        None => ClosureOperator::identity(pref.ground().clone()),
                    };
                    reports::additive(&pref, &f)
                }
            }
        }
        Command::Mobius { topology } => Ok(reports::mobius(&read_operator(topology)?)),
        Command::Hasse { topology, dot } => Ok(reports::hasse(&read_operator(topology)?, *dot)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["closure-ops"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&["frobnicate"]).0, EXIT_MALFORMED);
        assert_eq!(call(&["topology"]).0, EXIT_MALFORMED);
        assert_eq!(
            call(&["complexity", "--topology", "x", "--bogus"]).0,
            EXIT_MALFORMED
        );
        let (code, _, err) = call(&["complexity", "--topology", "/nonexistent/file.json"]);
        assert_eq!(code, EXIT_MALFORMED);
        assert!(err.starts_with("error:"));
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("menu-rep"));
    }
}
