//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on usage or parse errors, 2 when an internal
//! cross-check fails (the closed forms disagree or a verification suite
//! fails).

use std::cmp::Ordering;
use std::io::Write;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::bigrassmannian::{below_set, beta_report, BetaReport};
use crate::dot::below_set_dot;
use crate::error::Error;
use crate::perm::Permutation;
use crate::sweep::{verify, Execution, SuiteStatus, VerifyReport};
use crate::triangle::{triangle_of_permutation, JoinIrreducibleIndex, MonotoneTriangle};

pub const FORMAT_VERSION: &str = "1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "bruhat-beta",
    version,
    about = "Bigrassmannian permutations below a permutation in Bruhat order"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count B(x) with every closed form
    Beta {
        /// One-line notation: "42513", "4 2 5 1 3" or "4,2,5,1,3"
        #[arg(required = true, num_args = 1..)]
        perm: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// List B(x) with the (a,b,c) index of each element
    Below {
        #[arg(required = true, num_args = 1..)]
        perm: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Print the monotone triangle of x
    Triangle {
        #[arg(required = true, num_args = 1..)]
        perm: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Compare two permutations in Bruhat order
    Compare {
        first: String,
        second: String,
        #[arg(long)]
        json: bool,
    },
    /// Build the join-irreducible J_abc of order n
    Jirr {
        n: usize,
        a: usize,
        b: usize,
        c: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run the exhaustive verification suites at degree n
    Verify {
        #[arg(long)]
        n: usize,
        /// Worker threads; 0 picks the default
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Run on the calling thread only
        #[arg(long)]
        sequential: bool,
        #[arg(long)]
        json: bool,
    },
    /// Graphviz digraph of B(x) and x with covering edges
    ExportDot {
        #[arg(required = true, num_args = 1..)]
        perm: Vec<String>,
    },
}

/// Envelope for every `--json` document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord<T> {
    pub spec_version: String,
    pub command: String,
    pub input: String,
    pub result: T,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaOutput {
    pub permutation: Vec<usize>,
    pub beta: Option<u64>,
    pub report: BetaReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BelowElement {
    pub permutation: Vec<usize>,
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BelowOutput {
    pub permutation: Vec<usize>,
    pub count: usize,
    pub elements: Vec<BelowElement>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleOutput {
    pub order: usize,
    pub rows: Vec<Vec<u16>>,
    pub sigma: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl Verdict {
    fn from_ordering(ord: Option<Ordering>) -> Self {
        match ord {
            Some(Ordering::Less) => Verdict::Less,
            Some(Ordering::Equal) => Verdict::Equal,
            Some(Ordering::Greater) => Verdict::Greater,
            None => Verdict::Incomparable,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Verdict::Less => "less",
            Verdict::Equal => "equal",
            Verdict::Greater => "greater",
            Verdict::Incomparable => "incomparable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareOutput {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JirrOutput {
    pub n: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub permutation: Vec<usize>,
    pub rows: Vec<Vec<u16>>,
}

/// Parses `args` (program name first) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(CliError::Usage(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

enum CliError {
    Usage(Error),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn parse_perm(parts: &[String]) -> Result<Permutation, Error> {
    parts.join(" ").parse()
}

fn emit_json<T: Serialize>(
    out: &mut dyn Write,
    command: &str,
    input: String,
    result: T,
) -> std::io::Result<()> {
    let record = OutputRecord {
        spec_version: FORMAT_VERSION.to_string(),
        command: command.to_string(),
        input,
        result,
    };
    let text = serde_json::to_string_pretty(&record).map_err(std::io::Error::other)?;
    writeln!(out, "{text}")
}

fn rows_of(t: &MonotoneTriangle) -> Vec<Vec<u16>> {
    t.rows().map(<[u16]>::to_vec).collect()
}

fn write_triangle(out: &mut dyn Write, t: &MonotoneTriangle) -> std::io::Result<()> {
    if t.order() < 2 {
        writeln!(out, "(empty triangle: order {})", t.order())
    } else {
        writeln!(out, "{t}")
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Beta { perm, json } => {
            let x = parse_perm(&perm)?;
            let report = beta_report(&x);
            if json {
                let result = BetaOutput {
                    permutation: x.values().to_vec(),
                    beta: report.value(),
                    report,
                };
                emit_json(out, "beta", x.to_string(), result)?;
            } else {
                let BetaReport {
                    beta_positional,
                    beta_squares,
                    beta_inversions,
                    beta_sigma,
                    agree,
                } = report;
                let shown = if agree {
                    beta_positional.to_string()
                } else {
                    "?".to_string()
                };
                writeln!(
                    out,
                    "beta = {shown} (positional={beta_positional} squares={beta_squares} inversions={beta_inversions} sigma={beta_sigma})"
                )?;
                if !agree {
                    writeln!(out, "internal error: closed forms disagree")?;
                }
            }
            Ok(if report.agree { EXIT_OK } else { EXIT_INTERNAL })
        }
        Command::Below { perm, json } => {
            let x = parse_perm(&perm)?;
            let below = below_set(&x);
            if json {
                let elements = below
                    .iter()
                    .map(|(idx, w)| BelowElement {
                        permutation: w.values().to_vec(),
                        a: idx.a,
                        b: idx.b,
                        c: idx.c,
                    })
                    .collect();
                let result = BelowOutput {
                    permutation: x.values().to_vec(),
                    count: below.len(),
                    elements,
                };
                emit_json(out, "below", x.to_string(), result)?;
            } else {
                for (idx, w) in below.iter() {
                    writeln!(out, "{w} {idx}")?;
                }
                writeln!(out, "count = {}", below.len())?;
            }
            Ok(EXIT_OK)
        }
        Command::Triangle { perm, json } => {
            let x = parse_perm(&perm)?;
            let t = triangle_of_permutation(&x);
            if json {
                let result = TriangleOutput {
                    order: t.order(),
                    rows: rows_of(&t),
                    sigma: t.sigma(),
                };
                emit_json(out, "triangle", x.to_string(), result)?;
            } else {
                write_triangle(out, &t)?;
            }
            Ok(EXIT_OK)
        }
        Command::Compare {
            first,
            second,
            json,
        } => {
            let (x, y) = (
                first.parse::<Permutation>()?,
                second.parse::<Permutation>()?,
            );
            let ord = triangle_of_permutation(&x).compare(&triangle_of_permutation(&y))?;
            let verdict = Verdict::from_ordering(ord);
            if json {
                let result = CompareOutput {
                    first: x.values().to_vec(),
                    second: y.values().to_vec(),
                    verdict,
                };
                emit_json(out, "compare", format!("{x} {y}"), result)?;
            } else {
                writeln!(out, "{}", verdict.as_str())?;
            }
            Ok(EXIT_OK)
        }
        Command::Jirr { n, a, b, c, json } => {
            let idx = JoinIrreducibleIndex::new(n, a, b, c)?;
            let w = idx.permutation();
            let t = idx.triangle();
            if json {
                let result = JirrOutput {
                    n,
                    a,
                    b,
                    c,
                    permutation: w.values().to_vec(),
                    rows: rows_of(&t),
                };
                emit_json(out, "jirr", format!("{n} {a} {b} {c}"), result)?;
            } else {
                writeln!(out, "{w}")?;
                write_triangle(out, &t)?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            n,
            jobs,
            sequential,
            json,
        } => {
            let exec = if sequential {
                Execution::Sequential
            } else {
                Execution::Parallel { jobs }
            };
            let report = verify(n, exec)?;
            if json {
                emit_json(out, "verify", n.to_string(), &report)?;
            } else {
                write_verify(out, &report)?;
            }
            Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_INTERNAL
            })
        }
        Command::ExportDot { perm } => {
            let x = parse_perm(&perm)?;
            write!(out, "{}", below_set_dot(&x)?)?;
            Ok(EXIT_OK)
        }
    }
}

fn write_verify(out: &mut dyn Write, report: &VerifyReport) -> std::io::Result<()> {
    writeln!(
        out,
        "verify n = {} ({} permutations)",
        report.degree, report.permutations
    )?;
    for suite in &report.suites {
        let status = match suite.status {
            SuiteStatus::Passed => "pass",
            SuiteStatus::Failed => "FAIL",
            SuiteStatus::Skipped => "skip",
        };
        if suite.status == SuiteStatus::Skipped {
            writeln!(out, "{}: {status} ({})", suite.name, suite.note)?;
        } else {
            writeln!(
                out,
                "{}: {status} ({} checked; {})",
                suite.name, suite.checked, suite.note
            )?;
        }
        if let Some(failure) = &suite.failure {
            writeln!(out, "  first failure: {failure}")?;
        }
    }
    writeln!(out, "bigrassmannians = {}", report.bigrassmannians)?;
    writeln!(
        out,
        "result: {}",
        if report.passed() { "pass" } else { "FAIL" }
    )
}
