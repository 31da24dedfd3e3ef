//! Command-line front end. Everything here only parses arguments, calls the
//! library and formats results.
//!
//! Exit status: 0 success, 1 failed verification or exhausted search,
//! 2 usage or input error, 3 search budget exceeded.

use std::fs;
use std::io::{self, Read, Write};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::io::{
    export_dot, export_json, export_matrix, export_outcome_json, export_tournament_json,
    parse_json, parse_matrix, parse_tournament_json, Coloring, ExportStyle, Format,
};
use crate::oracle::{
    find_decomposition_parallel, verify_decomposition, SearchBudget, SearchStatus,
};
use crate::rotation::{rotation_decomposition, rotation_tournament};
use crate::step::{decompose_prime, pack_leading, PackingResult};
use crate::tournament::{EdgeType, Tournament};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "hamdecomp",
    version,
    about = "Hamilton decompositions of diregular tournaments"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Tournament order m = 2n + 1.
    #[arg(long, global = true)]
    order: Option<usize>,

    /// matrix, dot or json.
    #[arg(long, global = true)]
    format: Option<Format>,

    /// DOT coloring: by-circuit, by-edge-type or none.
    #[arg(long, global = true)]
    color: Option<Coloring>,

    /// Tournament input (adjacency matrix or tournament JSON); `-` for stdin.
    #[arg(long, global = true)]
    input: Option<String>,

    /// Output path; stdout when omitted or `-`.
    #[arg(long, global = true)]
    output: Option<String>,

    #[arg(long, global = true)]
    budget_nodes: Option<u64>,

    #[arg(long, global = true)]
    budget_seconds: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Tournament,
    Decomposition,
    Both,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Leading diregular tournament of the given order.
    Build,
    /// Step-sequence Hamilton decomposition (prime orders only).
    Decompose,
    /// Coprime-step circuits plus the residual cycle systems.
    Pack,
    /// Rotational construction for any odd order.
    Rotate {
        #[arg(long, value_enum, default_value = "both")]
        emit: Emit,
    },
    /// Exhaustive search for a Hamilton decomposition.
    Search {
        /// Worker threads for the top-level branches.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Check a packing (JSON) against a tournament.
    Verify {
        #[arg(long)]
        packing: String,
    },
    /// Per-edge distance types of a leading tournament.
    Classify,
}

/// Result of one command: text for stdout and an exit status.
struct Report {
    text: String,
    status: i32,
}

impl Report {
    fn ok(text: String) -> Self {
        Report {
            text,
            status: EXIT_OK,
        }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Lib(Error),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(s) | CliError::Io(s) => f.write_str(s),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Runs the CLI on `args` (including the program name) and returns the
/// exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if status == EXIT_OK {
                let _ = stdout.write_all(rendered.as_bytes());
            } else {
                let _ = stderr.write_all(rendered.as_bytes());
            }
            return status;
        }
    };
    match execute(&cli) {
        Ok(report) => match write_output(cli.output.as_deref(), &report.text, stdout) {
            Ok(()) => report.status,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                EXIT_USAGE
            }
        },
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn write_output(path: Option<&str>, text: &str, stdout: &mut dyn Write) -> CliResult<()> {
    match path {
        None | Some("-") => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(format!("writing stdout: {e}"))),
        Some(p) => fs::write(p, text).map_err(|e| CliError::Io(format!("writing {p}: {e}"))),
    }
}

fn read_source(path: &str) -> CliResult<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("reading {path}: {e}")))
    }
}

fn require_order(cli: &Cli, cmd: &str) -> CliResult<usize> {
    cli.order
        .ok_or_else(|| CliError::Usage(format!("`{cmd}` requires --order <m>")))
}

/// Tournament from `--input`, or the leading tournament of `--order`.
fn load_tournament(cli: &Cli, cmd: &str) -> CliResult<Tournament> {
    match (&cli.input, cli.order) {
        (Some(path), _) => {
            let text = read_source(path)?;
            if text.trim_start().starts_with('{') {
                Ok(parse_tournament_json(&text)?)
            } else {
                Ok(parse_matrix(&text)?)
            }
        }
        (None, Some(m)) => Ok(Tournament::leading(m)?),
        (None, None) => Err(CliError::Usage(format!(
            "`{cmd}` requires --input <path> or --order <m>"
        ))),
    }
}

fn style(
    cli: &Cli,
    default_format: Format,
    default_dot_coloring: Coloring,
) -> CliResult<ExportStyle> {
    let format = cli.format.unwrap_or(default_format);
    let coloring = match (format, cli.color) {
        (Format::Dot, None) => default_dot_coloring,
        (_, None) => Coloring::None,
        (_, Some(c)) => c,
    };
    ExportStyle::new(format, coloring).map_err(|e| CliError::Usage(e.to_string()))
}

fn render_tournament(t: &Tournament, style: ExportStyle) -> CliResult<String> {
    Ok(match style.format() {
        Format::Matrix => export_matrix(t),
        Format::Json => export_tournament_json(t),
        Format::Dot => export_dot(t, None, style.coloring())?,
    })
}

fn render_packing(t: &Tournament, p: &PackingResult, style: ExportStyle) -> CliResult<String> {
    match style.format() {
        Format::Json => Ok(export_json(p)),
        Format::Dot => Ok(export_dot(t, Some(p), style.coloring())?),
        Format::Matrix => Err(CliError::Usage(
            "packings are written as json or dot; matrix applies to tournaments".to_string(),
        )),
    }
}

fn budget(cli: &Cli) -> CliResult<SearchBudget> {
    let time_limit = match cli.budget_seconds {
        None => None,
        Some(s) if s.is_finite() && s > 0.0 => Some(Duration::from_secs_f64(s)),
        Some(s) => {
            return Err(CliError::Usage(format!(
                "--budget-seconds must be positive, got {s}"
            )))
        }
    };
    Ok(SearchBudget {
        max_nodes: cli.budget_nodes,
        time_limit,
    })
}

fn execute(cli: &Cli) -> CliResult<Report> {
    match &cli.command {
        Command::Build => {
            let t = Tournament::leading(require_order(cli, "build")?)?;
            let text = render_tournament(&t, style(cli, Format::Matrix, Coloring::None)?)?;
            Ok(Report::ok(text))
        }
        Command::Decompose => {
            let m = require_order(cli, "decompose")?;
            let p = decompose_prime(m)?;
            let t = Tournament::leading(m)?;
            Ok(Report::ok(render_packing(
                &t,
                &p,
                style(cli, Format::Json, Coloring::ByCircuit)?,
            )?))
        }
        Command::Pack => {
            let m = require_order(cli, "pack")?;
            let p = pack_leading(m)?;
            let t = Tournament::leading(m)?;
            Ok(Report::ok(render_packing(
                &t,
                &p,
                style(cli, Format::Json, Coloring::ByCircuit)?,
            )?))
        }
        Command::Rotate { emit } => {
            let m = require_order(cli, "rotate")?;
            let p = rotation_decomposition(m)?;
            let t = rotation_tournament(m)?;
            let text = match emit {
                Emit::Tournament => {
                    render_tournament(&t, style(cli, Format::Matrix, Coloring::None)?)?
                }
                Emit::Decomposition => {
                    render_packing(&t, &p, style(cli, Format::Json, Coloring::ByCircuit)?)?
                }
                Emit::Both => {
                    let s = style(cli, Format::Json, Coloring::ByCircuit)?;
                    match s.format() {
                        Format::Json => format!(
                            "{{\"tournament\":{},\"decomposition\":{}}}\n",
                            export_tournament_json(&t).trim_end(),
                            export_json(&p).trim_end()
                        ),
                        Format::Matrix => format!("{}{}", export_matrix(&t), export_json(&p)),
                        Format::Dot => export_dot(&t, Some(&p), s.coloring())?,
                    }
                }
            };
            Ok(Report::ok(text))
        }
        Command::Search { jobs } => {
            if cli.format.is_some_and(|f| f != Format::Json) {
                return Err(CliError::Usage(
                    "search results are written as json".to_string(),
                ));
            }
            let t = load_tournament(cli, "search")?;
            let outcome = find_decomposition_parallel(&t, budget(cli)?, *jobs)?;
            let status = match outcome.status {
                SearchStatus::Decomposed => EXIT_OK,
                SearchStatus::ExhaustedNoDecomposition => EXIT_FAIL,
                SearchStatus::BudgetExceeded => EXIT_BUDGET,
            };
            Ok(Report {
                text: export_outcome_json(&outcome),
                status,
            })
        }
        Command::Verify { packing } => {
            let t = load_tournament(cli, "verify")?;
            let p = parse_json(&read_source(packing)?)?;
            let v = verify_decomposition(&t, &p);
            if v.is_ok() {
                let kind = if p.is_decomposition() {
                    "Hamilton decomposition"
                } else {
                    "packing with residual"
                };
                Ok(Report::ok(format!(
                    "PASS: {kind} of order {} ({} circuits, {} residual systems)\n",
                    p.order,
                    p.circuits.len(),
                    p.residual.len()
                )))
            } else {
                let mut text = String::from("FAIL\n");
                for d in &v.diagnostics {
                    text.push_str(&format!("  {d}\n"));
                }
                Ok(Report {
                    text,
                    status: EXIT_FAIL,
                })
            }
        }
        Command::Classify => {
            let t = load_tournament(cli, "classify")?;
            let mut counts = vec![0usize; t.half() + 1];
            let mut text = String::from("from to type\n");
            for e in t.edges() {
                let ty = t.edge_type(e)?.distance();
                counts[ty] += 1;
                text.push_str(&format!("{} {} {}\n", e.from.label(), e.to.label(), ty));
            }
            for (ty, count) in counts.iter().enumerate().skip(1) {
                debug_assert_eq!(t.edges_of_type(EdgeType::new(ty))?.len(), *count);
                text.push_str(&format!("type {ty}: {count} edges\n"));
            }
            Ok(Report::ok(text))
        }
    }
}
