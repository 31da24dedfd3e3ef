//! Text formats: adjacency matrices, DOT digraphs and JSON packings.
//!
//! All formats use 1-based labels and end with a newline. Matrix rows are
//! `0`/`1` separated by single spaces.
//!
//! DOT colours are fixed. Circuits cycle through [`CIRCUIT_PALETTE`] in
//! order; residual cycles are drawn in [`RESIDUAL_COLOR`]. With edge-type
//! colouring, type `t` takes `CIRCUIT_PALETTE[(t - 1) % 8]`.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::{verify_decomposition, SearchOutcome, SearchStatus};
use crate::step::{canonical_rotation, CycleSystem, HamiltonCircuit, PackingResult, StepValue};
use crate::tournament::{check_order, DirectedEdge, Tournament, VertexId};

pub const CIRCUIT_PALETTE: [&str; 8] = [
    "brown", "green", "orange", "purple", "red", "darkcyan", "magenta", "gold",
];
pub const RESIDUAL_COLOR: &str = "blue";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Matrix,
    Dot,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "matrix" => Ok(Format::Matrix),
            "dot" => Ok(Format::Dot),
            "json" => Ok(Format::Json),
            _ => Err(format!(
                "unknown format `{s}` (expected matrix, dot or json)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coloring {
    ByCircuit,
    ByEdgeType,
    None,
}

impl FromStr for Coloring {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "by-circuit" => Ok(Coloring::ByCircuit),
            "by-edge-type" => Ok(Coloring::ByEdgeType),
            "none" => Ok(Coloring::None),
            _ => Err(format!(
                "unknown coloring `{s}` (expected by-circuit, by-edge-type or none)"
            )),
        }
    }
}

/// Output format plus DOT colouring; colouring other than `None` is only
/// meaningful for DOT.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExportStyle {
    format: Format,
    coloring: Coloring,
}

impl ExportStyle {
    pub fn new(format: Format, coloring: Coloring) -> Result<Self> {
        if format != Format::Dot && coloring != Coloring::None {
            return Err(Error::StyleMismatch(
                "coloring applies only to the dot format".to_string(),
            ));
        }
        Ok(ExportStyle { format, coloring })
    }

    pub fn format(&self) -> Format {
        self.format
    }

    pub fn coloring(&self) -> Coloring {
        self.coloring
    }
}

pub fn export_matrix(t: &Tournament) -> String {
    let mut out = String::with_capacity(t.order() * t.order() * 2);
    for row in t.rows() {
        let line: Vec<&str> = row
            .iter()
            .map(|&b| if b == 1 { "1" } else { "0" })
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a whitespace-separated 0/1 grid. Blank lines are ignored.
pub fn parse_matrix(text: &str) -> Result<Tournament> {
    let err = |row: usize, col: usize, message: String| Error::MatrixParse { row, col, message };

    let mut rows: Vec<Vec<bool>> = Vec::new();
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        let r = rows.len() + 1;
        let row = line
            .split_whitespace()
            .enumerate()
            .map(|(c, tok)| match tok {
                "0" => Ok(false),
                "1" => Ok(true),
                _ => Err(err(r, c + 1, format!("expected 0 or 1, found `{tok}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    let m = rows.len();
    if m == 0 {
        return Err(err(0, 0, "empty matrix".to_string()));
    }
    for (r, row) in rows.iter().enumerate() {
        if row.len() != m {
            return Err(err(
                r + 1,
                row.len().min(m) + 1,
                format!("row has {} entries, expected {m}", row.len()),
            ));
        }
    }
    for i in 0..m {
        if rows[i][i] {
            return Err(err(i + 1, i + 1, "loop on the diagonal".to_string()));
        }
        for j in i + 1..m {
            match (rows[i][j], rows[j][i]) {
                (true, true) => {
                    return Err(err(
                        i + 1,
                        j + 1,
                        format!("pair ({}, {}) joined in both directions", i + 1, j + 1),
                    ))
                }
                (false, false) => {
                    return Err(err(
                        i + 1,
                        j + 1,
                        format!("pair ({}, {}) joined in neither direction", i + 1, j + 1),
                    ))
                }
                _ => {}
            }
        }
    }
    check_order(m)?;
    Tournament::from_rows(&rows)
}

/// DOT digraph with nodes `v1..vm` and edges sorted by `(from, to)`.
pub fn export_dot(t: &Tournament, p: Option<&PackingResult>, coloring: Coloring) -> Result<String> {
    if let Some(p) = p {
        let v = verify_decomposition(t, p);
        if let Some(first) = v.diagnostics.first() {
            return Err(Error::StyleMismatch(format!(
                "packing does not match the tournament: {first}"
            )));
        }
    }
    let m = t.order();
    let mut colors: Vec<Option<&str>> = vec![None; m * m];
    let slot = |e: DirectedEdge| e.from.index() * m + e.to.index();
    match coloring {
        Coloring::None => {}
        Coloring::ByCircuit => {
            let p = p.ok_or_else(|| {
                Error::StyleMismatch("by-circuit coloring needs a packing".to_string())
            })?;
            for (k, c) in p.circuits.iter().enumerate() {
                for e in c.edges() {
                    colors[slot(e)] = Some(CIRCUIT_PALETTE[k % CIRCUIT_PALETTE.len()]);
                }
            }
            for e in p.residual.iter().flat_map(|s| s.edges()) {
                colors[slot(e)] = Some(RESIDUAL_COLOR);
            }
        }
        Coloring::ByEdgeType => {
            if *t != Tournament::leading(m)? {
                return Err(Error::StyleMismatch(
                    "by-edge-type coloring needs a leading tournament".to_string(),
                ));
            }
            for e in t.edges() {
                let ty = t.edge_type(e)?.distance();
                colors[slot(e)] = Some(CIRCUIT_PALETTE[(ty - 1) % CIRCUIT_PALETTE.len()]);
            }
        }
    }

    let mut out = String::new();
    out.push_str("digraph tournament {\n");
    out.push_str("  node [shape=circle];\n");
    for v in t.vertices() {
        let _ = writeln!(out, "  v{};", v.label());
    }
    for e in t.edges() {
        let _ = match colors[slot(e)] {
            Some(c) => writeln!(
                out,
                "  v{} -> v{} [color={c}];",
                e.from.label(),
                e.to.label()
            ),
            None => writeln!(out, "  v{} -> v{};", e.from.label(), e.to.label()),
        };
    }
    out.push_str("}\n");
    Ok(out)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PackingDoc {
    order: usize,
    circuits: Vec<Vec<usize>>,
    residual: Vec<ResidualDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ResidualDoc {
    step: usize,
    cycles: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TournamentDoc {
    order: usize,
    adjacency: Vec<Vec<u8>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OutcomeDoc {
    status: String,
    nodes_explored: u64,
    decomposition: Option<PackingDoc>,
}

fn labels(vs: &[VertexId]) -> Vec<usize> {
    vs.iter().map(|v| v.label()).collect()
}

impl From<&PackingResult> for PackingDoc {
    fn from(p: &PackingResult) -> Self {
        PackingDoc {
            order: p.order,
            circuits: p.circuits.iter().map(HamiltonCircuit::labels).collect(),
            residual: p
                .residual
                .iter()
                .map(|s| ResidualDoc {
                    step: s.step.alpha(),
                    cycles: s.cycles.iter().map(|c| labels(c)).collect(),
                })
                .collect(),
        }
    }
}

fn json_err(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Json {
        path: path.into(),
        message: message.into(),
    }
}

fn cycle_from_doc(path: &str, order: usize, cycle: &[usize]) -> Result<Vec<VertexId>> {
    if cycle.is_empty() {
        return Err(json_err(path, "empty cycle"));
    }
    cycle
        .iter()
        .enumerate()
        .map(|(k, &l)| {
            if l == 0 || l > order {
                Err(json_err(
                    format!("{path}[{k}]"),
                    format!("label {l} outside 1..={order}"),
                ))
            } else {
                Ok(VertexId::new(l))
            }
        })
        .collect()
}

impl PackingDoc {
    fn into_packing(self, base: &str) -> Result<PackingResult> {
        let order = self.order;
        check_order(order).map_err(|e| json_err(format!("{base}order"), e.to_string()))?;
        let circuits = self
            .circuits
            .iter()
            .enumerate()
            .map(|(i, c)| {
                cycle_from_doc(&format!("{base}circuits[{i}]"), order, c)
                    .map(HamiltonCircuit::from_cycle)
            })
            .collect::<Result<Vec<_>>>()?;
        let residual = self
            .residual
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let step = StepValue::new(r.step, order)
                    .map_err(|e| json_err(format!("{base}residual[{i}].step"), e.to_string()))?;
                let cycles = r
                    .cycles
                    .iter()
                    .enumerate()
                    .map(|(j, c)| {
                        cycle_from_doc(&format!("{base}residual[{i}].cycles[{j}]"), order, c)
                            .map(canonical_rotation)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(CycleSystem { step, cycles })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PackingResult {
            order,
            circuits,
            residual,
        })
    }
}

fn to_json_line<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string(doc).expect("plain data serializes");
    s.push('\n');
    s
}

fn from_json<'de, T: Deserialize<'de>>(text: &'de str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        json_err(path, e.into_inner().to_string())
    })
}

/// Single-line JSON `{"order":..,"circuits":[..],"residual":[{"step":..,"cycles":[..]}]}`.
pub fn export_json(p: &PackingResult) -> String {
    to_json_line(&PackingDoc::from(p))
}

/// Inverse of [`export_json`]; cycles are re-rooted at their smallest label.
pub fn parse_json(text: &str) -> Result<PackingResult> {
    from_json::<PackingDoc>(text)?.into_packing("")
}

/// `{"order":m,"adjacency":[[0,1,..],..]}`.
pub fn export_tournament_json(t: &Tournament) -> String {
    to_json_line(&TournamentDoc {
        order: t.order(),
        adjacency: t.rows(),
    })
}

pub fn parse_tournament_json(text: &str) -> Result<Tournament> {
    let doc: TournamentDoc = from_json(text)?;
    if doc.adjacency.len() != doc.order {
        return Err(json_err(
            "adjacency",
            format!("expected {} rows", doc.order),
        ));
    }
    let mut rows = Vec::with_capacity(doc.order);
    for (i, row) in doc.adjacency.iter().enumerate() {
        if row.len() != doc.order {
            return Err(json_err(
                format!("adjacency[{i}]"),
                format!("expected {} entries", doc.order),
            ));
        }
        let row = row
            .iter()
            .enumerate()
            .map(|(j, &b)| match b {
                0 => Ok(false),
                1 => Ok(true),
                _ => Err(json_err(format!("adjacency[{i}][{j}]"), "expected 0 or 1")),
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Tournament::from_rows(&rows)
}

/// `{"status":..,"nodes_explored":..,"decomposition":{..}|null}`.
pub fn export_outcome_json(o: &SearchOutcome) -> String {
    to_json_line(&OutcomeDoc {
        status: o.status.as_str().to_string(),
        nodes_explored: o.nodes_explored,
        decomposition: o.decomposition.as_ref().map(PackingDoc::from),
    })
}

pub fn parse_outcome_json(text: &str) -> Result<SearchOutcome> {
    let doc: OutcomeDoc = from_json(text)?;
    let status = match doc.status.as_str() {
        "decomposed" => SearchStatus::Decomposed,
        "exhausted-no-decomposition" => SearchStatus::ExhaustedNoDecomposition,
        "budget-exceeded" => SearchStatus::BudgetExceeded,
        other => return Err(json_err("status", format!("unknown status `{other}`"))),
    };
    let decomposition = doc
        .decomposition
        .map(|d| d.into_packing("decomposition."))
        .transpose()?;
    if (status == SearchStatus::Decomposed) != decomposition.is_some() {
        return Err(json_err(
            "decomposition",
            "present iff status is `decomposed`",
        ));
    }
    Ok(SearchOutcome {
        status,
        decomposition,
        nodes_explored: doc.nodes_explored,
    })
}
