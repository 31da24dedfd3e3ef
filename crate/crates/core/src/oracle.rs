//! Exhaustive search for Hamilton decompositions, and an independent
//! checker for any claimed packing.
//!
//! The search builds circuits one at a time, every circuit rooted at `v_1`
//! and extended through out-neighbours in ascending label order. Circuits
//! are produced in increasing order of their second vertex, which removes
//! the `n!` reorderings of a single decomposition. Since `v_1` has exactly
//! `n` out-edges and every circuit consumes one, the `k`-th circuit must
//! leave `v_1` through the `k`-th smallest of them; the search uses that
//! directly instead of enumerating larger second vertices that can never
//! complete.
//!
//! The search is deterministic. The parallel mode splits the branches of
//! the first circuit's third vertex across workers and merges them in
//! canonical order, so it reports the same decomposition and node count as
//! the single-threaded run.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::step::{cycle_edges, HamiltonCircuit, PackingResult};
use crate::tournament::{DirectedEdge, EdgeSet, Tournament, VertexId};

/// Largest order searched without an explicit budget.
pub const EXHAUSTIVE_CEILING: usize = 11;

/// Where in a packing a violation was found; indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    Circuit(usize),
    Residual { system: usize, cycle: usize },
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Part::Circuit(k) => write!(f, "circuit {k}"),
            Part::Residual { system, cycle } => write!(f, "residual system {system} cycle {cycle}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    OrderMismatch {
        tournament: usize,
        packing: usize,
    },
    NotHamilton {
        part: Part,
        len: usize,
        order: usize,
    },
    VertexOutOfRange {
        part: Part,
        vertex: VertexId,
    },
    RepeatedVertex {
        part: Part,
        vertex: VertexId,
    },
    MissingEdge {
        part: Part,
        edge: DirectedEdge,
    },
    DuplicateEdge {
        part: Part,
        edge: DirectedEdge,
    },
    UncoveredEdge {
        edge: DirectedEdge,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OrderMismatch {
                tournament,
                packing,
            } => {
                write!(
                    f,
                    "packing has order {packing} but the tournament has order {tournament}"
                )
            }
            Violation::NotHamilton { part, len, order } => {
                write!(
                    f,
                    "{part} has {len} vertices, a Hamilton circuit needs {order}"
                )
            }
            Violation::VertexOutOfRange { part, vertex } => {
                write!(f, "{part} uses unknown vertex {vertex}")
            }
            Violation::RepeatedVertex { part, vertex } => write!(f, "{part} visits {vertex} twice"),
            Violation::MissingEdge { part, edge } => {
                write!(f, "{part} uses {edge}, which is not an edge")
            }
            Violation::DuplicateEdge { part, edge } => write!(f, "duplicate edge {edge} in {part}"),
            Violation::UncoveredEdge { edge } => write!(f, "edge {edge} is not covered"),
        }
    }
}

/// Outcome of [`verify_decomposition`]; the first diagnostic is the first
/// condition found violated.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Verification {
    pub diagnostics: Vec<Violation>,
}

impl Verification {
    pub fn is_ok(&self) -> bool {
        self.diagnostics.is_empty()
    }
}

/// Checks that the circuits are Hamilton circuits of `t`, that circuits and
/// residual cycles are pairwise edge-disjoint, and that together they cover
/// every edge of `t`.
pub fn verify_decomposition(t: &Tournament, p: &PackingResult) -> Verification {
    let m = t.order();
    let mut diagnostics = Vec::new();
    if p.order != m {
        diagnostics.push(Violation::OrderMismatch {
            tournament: m,
            packing: p.order,
        });
        return Verification { diagnostics };
    }

    let parts = p
        .circuits
        .iter()
        .enumerate()
        .map(|(k, c)| (Part::Circuit(k + 1), c.vertices()))
        .chain(p.residual.iter().enumerate().flat_map(|(s, sys)| {
            sys.cycles.iter().enumerate().map(move |(c, cyc)| {
                (
                    Part::Residual {
                        system: s + 1,
                        cycle: c + 1,
                    },
                    cyc.as_slice(),
                )
            })
        }));

    let mut covered = EdgeSet::new(m);
    for (part, cycle) in parts {
        if let Part::Circuit(_) = part {
            if cycle.len() != m {
                diagnostics.push(Violation::NotHamilton {
                    part,
                    len: cycle.len(),
                    order: m,
                });
            }
        }
        if let Some(&vertex) = cycle.iter().find(|v| !t.contains_vertex(**v)) {
            diagnostics.push(Violation::VertexOutOfRange { part, vertex });
            continue;
        }
        let mut on_cycle = vec![false; m];
        for &v in cycle {
            if std::mem::replace(&mut on_cycle[v.index()], true) {
                diagnostics.push(Violation::RepeatedVertex { part, vertex: v });
            }
        }
        for edge in cycle_edges(cycle) {
            if !t.has_edge(edge) {
                diagnostics.push(Violation::MissingEdge { part, edge });
            } else if !covered.insert(edge) {
                diagnostics.push(Violation::DuplicateEdge { part, edge });
            }
        }
    }
    for edge in t.edges() {
        if !covered.contains(edge) {
            diagnostics.push(Violation::UncoveredEdge { edge });
        }
    }
    Verification { diagnostics }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        SearchBudget::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        SearchBudget {
            max_nodes: Some(max_nodes),
            time_limit: None,
        }
    }

    pub fn is_unlimited(&self) -> bool {
        self.max_nodes.is_none() && self.time_limit.is_none()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    Decomposed,
    ExhaustedNoDecomposition,
    BudgetExceeded,
}

impl SearchStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchStatus::Decomposed => "decomposed",
            SearchStatus::ExhaustedNoDecomposition => "exhausted-no-decomposition",
            SearchStatus::BudgetExceeded => "budget-exceeded",
        }
    }
}

impl fmt::Display for SearchStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    /// Present iff `status` is [`SearchStatus::Decomposed`].
    pub decomposition: Option<PackingResult>,
    /// Number of vertices pushed onto a partial circuit.
    pub nodes_explored: u64,
}

/// One-vertex extensions of a partial circuit rooted at `v_1`, in ascending
/// label order: out-neighbours of the last vertex that are not on the path
/// and whose edge is unused. A full-length path has no extensions; see
/// [`can_close`].
pub fn extensions(t: &Tournament, used: &EdgeSet, partial: &[VertexId]) -> Vec<VertexId> {
    let Some(&last) = partial.last() else {
        return Vec::new();
    };
    if partial.len() >= t.order() {
        return Vec::new();
    }
    t.out_neighbors(last)
        .filter(|&v| !partial.contains(&v) && !used.contains(DirectedEdge { from: last, to: v }))
        .collect()
}

/// Whether a full-length partial circuit can close back to its root.
pub fn can_close(t: &Tournament, used: &EdgeSet, partial: &[VertexId]) -> bool {
    match (partial.first(), partial.last()) {
        (Some(&root), Some(&last)) if partial.len() == t.order() => {
            let e = DirectedEdge {
                from: last,
                to: root,
            };
            t.has_edge(e) && !used.contains(e)
        }
        _ => false,
    }
}

/// Single-threaded canonical search.
pub fn find_decomposition(t: &Tournament, budget: SearchBudget) -> Result<SearchOutcome> {
    check_input(t, budget)?;
    let mut engine = Engine::new(t, budget, None);
    let flow = engine.next_circuit();
    Ok(engine.outcome(flow))
}

/// Same result as [`find_decomposition`], with the first circuit's branches
/// spread over `jobs` worker threads. `jobs <= 1` runs single-threaded.
pub fn find_decomposition_parallel(
    t: &Tournament,
    budget: SearchBudget,
    jobs: usize,
) -> Result<SearchOutcome> {
    if jobs <= 1 {
        return find_decomposition(t, budget);
    }
    check_input(t, budget)?;

    let mut root = Engine::new(t, budget, None);
    let prefix = match root.forced_prefix() {
        Ok(()) => root,
        Err(flow) => return Ok(root.outcome(flow)),
    };
    let last = *prefix.path.last().unwrap();
    let branches: Vec<usize> = prefix.out[last]
        .iter()
        .copied()
        .filter(|&v| !prefix.on_path[v] && !prefix.used[last * prefix.m + v])
        .collect();

    let winner = AtomicUsize::new(usize::MAX);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let results: Vec<BranchResult> = pool.install(|| {
        branches
            .par_iter()
            .enumerate()
            .map(|(j, &v)| {
                let cancel = || winner.load(Ordering::Relaxed) < j;
                let mut engine = prefix.fork(&cancel);
                let flow = engine.branch(v);
                if flow == Flow::Found {
                    winner.fetch_min(j, Ordering::Relaxed);
                }
                (flow, engine.nodes, engine.found.take())
            })
            .collect()
    });

    let mut total = prefix.nodes;
    for (flow, nodes, found) in results {
        total += nodes;
        if let Some(max) = budget.max_nodes {
            if total > max {
                return Ok(SearchOutcome {
                    status: SearchStatus::BudgetExceeded,
                    decomposition: None,
                    nodes_explored: max + 1,
                });
            }
        }
        match flow {
            Flow::Found => {
                return Ok(SearchOutcome {
                    status: SearchStatus::Decomposed,
                    decomposition: found.map(|c| to_packing(t.order(), c)),
                    nodes_explored: total,
                })
            }
            Flow::Abort => {
                return Ok(SearchOutcome {
                    status: SearchStatus::BudgetExceeded,
                    decomposition: None,
                    nodes_explored: total,
                })
            }
            Flow::Continue => {}
        }
    }
    Ok(SearchOutcome {
        status: SearchStatus::ExhaustedNoDecomposition,
        decomposition: None,
        nodes_explored: total,
    })
}

fn check_input(t: &Tournament, budget: SearchBudget) -> Result<()> {
    t.check_diregular()?;
    if t.order() > EXHAUSTIVE_CEILING && budget.is_unlimited() {
        return Err(Error::BudgetRequired {
            order: t.order(),
            ceiling: EXHAUSTIVE_CEILING,
        });
    }
    Ok(())
}

fn to_packing(order: usize, circuits: Vec<Vec<usize>>) -> PackingResult {
    PackingResult {
        order,
        circuits: circuits
            .into_iter()
            .map(|c| HamiltonCircuit::from_cycle(c.into_iter().map(VertexId::from_index).collect()))
            .collect(),
        residual: Vec::new(),
    }
}

/// Flow, node count and witness of one top-level branch.
type BranchResult = (Flow, u64, Option<Vec<Vec<usize>>>);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Flow {
    Found,
    Continue,
    Abort,
}

/// Backtracking state over 0-based indices; vertex 0 is `v_1`.
struct Engine<'a> {
    m: usize,
    n: usize,
    out: Vec<Vec<usize>>,
    used: Vec<bool>,
    on_path: Vec<bool>,
    path: Vec<usize>,
    circuits: Vec<Vec<usize>>,
    found: Option<Vec<Vec<usize>>>,
    nodes: u64,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
    cancel: Option<&'a (dyn Fn() -> bool + Sync)>,
}

impl<'a> Engine<'a> {
    fn new(
        t: &Tournament,
        budget: SearchBudget,
        cancel: Option<&'a (dyn Fn() -> bool + Sync)>,
    ) -> Self {
        let m = t.order();
        let out = t
            .vertices()
            .map(|v| t.out_neighbors(v).map(VertexId::index).collect())
            .collect();
        Engine {
            m,
            n: t.half(),
            out,
            used: vec![false; m * m],
            on_path: vec![false; m],
            path: Vec::with_capacity(m),
            circuits: Vec::new(),
            found: None,
            nodes: 0,
            max_nodes: budget.max_nodes,
            deadline: budget.time_limit.map(|d| Instant::now() + d),
            cancel,
        }
    }

    /// Copy of the current state with a fresh node counter, for one branch.
    fn fork<'b>(&self, cancel: &'b (dyn Fn() -> bool + Sync)) -> Engine<'b> {
        Engine {
            m: self.m,
            n: self.n,
            out: self.out.clone(),
            used: self.used.clone(),
            on_path: self.on_path.clone(),
            path: self.path.clone(),
            circuits: self.circuits.clone(),
            found: None,
            nodes: 0,
            max_nodes: self.max_nodes,
            deadline: self.deadline,
            cancel: Some(cancel),
        }
    }

    fn outcome(&mut self, flow: Flow) -> SearchOutcome {
        let (status, decomposition) = match flow {
            Flow::Found => (
                SearchStatus::Decomposed,
                self.found.take().map(|c| to_packing(self.m, c)),
            ),
            Flow::Continue => (SearchStatus::ExhaustedNoDecomposition, None),
            Flow::Abort => (SearchStatus::BudgetExceeded, None),
        };
        SearchOutcome {
            status,
            decomposition,
            nodes_explored: self.nodes,
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.max_nodes.is_some_and(|k| self.nodes > k) {
            return false;
        }
        if self.nodes % 1024 == 0 {
            if self.deadline.is_some_and(|d| Instant::now() >= d) {
                return false;
            }
            if self.cancel.is_some_and(|c| c()) {
                return false;
            }
        }
        true
    }

    fn push(&mut self, v: usize) {
        let last = *self.path.last().unwrap();
        self.used[last * self.m + v] = true;
        self.on_path[v] = true;
        self.path.push(v);
    }

    fn pop(&mut self) {
        let v = self.path.pop().unwrap();
        let last = *self.path.last().unwrap();
        self.used[last * self.m + v] = false;
        self.on_path[v] = false;
    }

    /// Every vertex still off the path must be enterable from the path end
    /// or another off-path vertex, and must be able to leave towards
    /// another off-path vertex or the root.
    fn feasible(&self) -> bool {
        let m = self.m;
        let last = *self.path.last().unwrap();
        (0..m).filter(|&u| !self.on_path[u]).all(|u| {
            let can_enter =
                (0..m).any(|x| x != u && (x == last || !self.on_path[x]) && self.is_free(x, u));
            let can_leave =
                (0..m).any(|y| y != u && (y == 0 || !self.on_path[y]) && self.is_free(u, y));
            can_enter && can_leave
        })
    }

    fn is_free(&self, from: usize, to: usize) -> bool {
        !self.used[from * self.m + to] && self.out[from].binary_search(&to).is_ok()
    }

    /// After a circuit closes, each vertex needs at least one unused in- and
    /// out-edge per circuit still to be built.
    fn degrees_suffice(&self) -> bool {
        let need = self.n - self.circuits.len();
        (0..self.m).all(|v| {
            let out = self.out[v]
                .iter()
                .filter(|&&w| !self.used[v * self.m + w])
                .count();
            let inn = (0..self.m).filter(|&u| self.is_free(u, v)).count();
            out >= need && inn >= need
        })
    }

    /// Start the path at the root and push the smallest unused out-neighbour
    /// of the root. `Err` carries the flow when the prefix already fails.
    fn forced_prefix(&mut self) -> std::result::Result<(), Flow> {
        let Some(w) = self.out[0].iter().copied().find(|&w| !self.used[w]) else {
            return Err(Flow::Continue);
        };
        self.path.push(0);
        self.on_path[0] = true;
        if !self.tick() {
            return Err(Flow::Abort);
        }
        self.push(w);
        if !self.feasible() {
            return Err(Flow::Continue);
        }
        Ok(())
    }

    fn next_circuit(&mut self) -> Flow {
        if self.circuits.len() == self.n {
            self.found = Some(self.circuits.clone());
            return Flow::Found;
        }
        let flow = match self.forced_prefix() {
            Ok(()) => self.extend(),
            Err(flow) => flow,
        };
        // unwind whatever part of the prefix was pushed
        while self.path.len() > 1 {
            self.pop();
        }
        if let Some(root) = self.path.pop() {
            self.on_path[root] = false;
        }
        flow
    }

    fn branch(&mut self, v: usize) -> Flow {
        if !self.tick() {
            return Flow::Abort;
        }
        self.push(v);
        let flow = if self.feasible() {
            self.extend()
        } else {
            Flow::Continue
        };
        self.pop();
        flow
    }

    fn extend(&mut self) -> Flow {
        let last = *self.path.last().unwrap();
        if self.path.len() == self.m {
            return self.close(last);
        }
        for k in 0..self.out[last].len() {
            let v = self.out[last][k];
            if self.on_path[v] || self.used[last * self.m + v] {
                continue;
            }
            let flow = self.branch(v);
            if flow != Flow::Continue {
                return flow;
            }
        }
        Flow::Continue
    }

    fn close(&mut self, last: usize) -> Flow {
        let closing = last * self.m;
        if self.used[closing] || self.out[last].binary_search(&0).is_err() {
            return Flow::Continue;
        }
        self.used[closing] = true;
        let path = std::mem::take(&mut self.path);
        self.on_path.iter_mut().for_each(|b| *b = false);
        self.circuits.push(path);

        let flow = if self.degrees_suffice() {
            self.next_circuit()
        } else {
            Flow::Continue
        };

        let path = self.circuits.pop().unwrap();
        for &v in &path {
            self.on_path[v] = true;
        }
        self.path = path;
        self.used[closing] = false;
        flow
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rotation::rotation_tournament;
    use crate::step::{decompose_prime, pack_leading};

    fn ids(labels: &[usize]) -> Vec<VertexId> {
        labels.iter().map(|&l| VertexId::new(l)).collect()
    }

    #[test]
    fn verifies_the_worked_packings() {
        let t7 = Tournament::leading(7).unwrap();
        assert!(verify_decomposition(&t7, &decompose_prime(7).unwrap()).is_ok());
        let t9 = Tournament::leading(9).unwrap();
        assert!(verify_decomposition(&t9, &pack_leading(9).unwrap()).is_ok());
    }

    #[test]
    fn duplicated_circuit_is_reported() {
        let t = Tournament::leading(7).unwrap();
        let mut p = decompose_prime(7).unwrap();
        p.circuits[0] = p.circuits[1].clone();
        let v = verify_decomposition(&t, &p);
        assert!(!v.is_ok());
        assert_eq!(
            v.diagnostics[0],
            Violation::DuplicateEdge {
                part: Part::Circuit(2),
                edge: DirectedEdge::new(1, 3)
            }
        );
        assert!(v
            .diagnostics
            .iter()
            .any(|d| matches!(d, Violation::UncoveredEdge { .. })));
    }

    #[test]
    fn other_violations() {
        let t = Tournament::leading(7).unwrap();
        let mut p = decompose_prime(7).unwrap();
        p.circuits[0] = HamiltonCircuit::from_labels(&[1, 2, 3]);
        let v = verify_decomposition(&t, &p);
        assert_eq!(
            v.diagnostics[0],
            Violation::NotHamilton {
                part: Part::Circuit(1),
                len: 3,
                order: 7
            }
        );
        assert!(v.diagnostics.contains(&Violation::MissingEdge {
            part: Part::Circuit(1),
            edge: DirectedEdge::new(3, 1)
        }));

        let mut p = decompose_prime(7).unwrap();
        p.circuits[2] = HamiltonCircuit::from_labels(&[1, 4, 7, 3, 6, 2, 9]);
        let v = verify_decomposition(&t, &p);
        assert_eq!(
            v.diagnostics[0],
            Violation::VertexOutOfRange {
                part: Part::Circuit(3),
                vertex: VertexId::new(9)
            }
        );

        let p = decompose_prime(5).unwrap();
        let v = verify_decomposition(&t, &p);
        assert_eq!(
            v.diagnostics,
            vec![Violation::OrderMismatch {
                tournament: 7,
                packing: 5
            }]
        );

        let mut p = decompose_prime(7).unwrap();
        p.circuits.pop();
        let v = verify_decomposition(&t, &p);
        assert_eq!(v.diagnostics.len(), 7);
        assert!(v
            .diagnostics
            .iter()
            .all(|d| matches!(d, Violation::UncoveredEdge { .. })));
    }

    #[test]
    fn extension_examples() {
        let t3 = Tournament::leading(3).unwrap();
        assert_eq!(extensions(&t3, &EdgeSet::new(3), &ids(&[1])), ids(&[2]));

        let t7 = Tournament::leading(7).unwrap();
        assert_eq!(
            extensions(&t7, &EdgeSet::new(7), &ids(&[1])),
            ids(&[2, 3, 4])
        );

        let used: EdgeSet = HamiltonCircuit::from_labels(&[1, 2, 3, 4, 5, 6, 7])
            .edges()
            .collect();
        assert_eq!(extensions(&t7, &used, &ids(&[1])), ids(&[3, 4]));

        // vertices on the path are skipped
        assert_eq!(
            extensions(&t7, &EdgeSet::new(7), &ids(&[1, 3])),
            ids(&[4, 5, 6])
        );
    }

    #[test]
    fn closing() {
        let t3 = Tournament::leading(3).unwrap();
        let path = ids(&[1, 2, 3]);
        assert!(extensions(&t3, &EdgeSet::new(3), &path).is_empty());
        assert!(can_close(&t3, &EdgeSet::new(3), &path));
        let mut used = EdgeSet::new(3);
        used.insert(DirectedEdge::new(3, 1));
        assert!(!can_close(&t3, &used, &path));
        assert!(!can_close(&t3, &EdgeSet::new(3), &ids(&[1, 2])));
    }

    #[test]
    fn search_small_leading() {
        let out = find_decomposition(&Tournament::leading(3).unwrap(), SearchBudget::unlimited())
            .unwrap();
        assert_eq!(out.status, SearchStatus::Decomposed);
        assert_eq!(
            out.decomposition.unwrap().circuits,
            vec![HamiltonCircuit::from_labels(&[1, 2, 3])]
        );

        for m in [5, 7] {
            let t = Tournament::leading(m).unwrap();
            let out = find_decomposition(&t, SearchBudget::unlimited()).unwrap();
            assert_eq!(out.status, SearchStatus::Decomposed);
            let p = out.decomposition.unwrap();
            assert_eq!(p.circuits.len(), (m - 1) / 2);
            assert!(verify_decomposition(&t, &p).is_ok());
            let seconds: Vec<_> = p.circuits.iter().map(|c| c.vertices()[1]).collect();
            assert!(seconds.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn search_rejects_bad_input() {
        let transitive = Tournament::from_fn(3, |i, j| i < j).unwrap();
        assert!(matches!(
            find_decomposition(&transitive, SearchBudget::unlimited()),
            Err(Error::NotDiregular { .. })
        ));
        let t13 = Tournament::leading(13).unwrap();
        assert_eq!(
            find_decomposition(&t13, SearchBudget::unlimited()),
            Err(Error::BudgetRequired {
                order: 13,
                ceiling: 11
            })
        );
    }

    #[test]
    fn budget_exceeded_and_monotone() {
        let t = Tournament::leading(7).unwrap();
        let full = find_decomposition(&t, SearchBudget::unlimited()).unwrap();
        let out = find_decomposition(&t, SearchBudget::nodes(0)).unwrap();
        assert_eq!(out.status, SearchStatus::BudgetExceeded);
        assert!(out.decomposition.is_none());
        for k in 0..full.nodes_explored + 5 {
            let out = find_decomposition(&t, SearchBudget::nodes(k)).unwrap();
            if k >= full.nodes_explored {
                assert_eq!(out, full);
            } else {
                assert_eq!(out.status, SearchStatus::BudgetExceeded, "k={k}");
                assert_eq!(out.nodes_explored, k + 1);
            }
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        for m in [3, 5, 7, 9] {
            let t = Tournament::leading(m).unwrap();
            let seq = find_decomposition(&t, SearchBudget::unlimited()).unwrap();
            for jobs in [2, 3, 4] {
                let par = find_decomposition_parallel(&t, SearchBudget::unlimited(), jobs).unwrap();
                assert_eq!(par, seq, "m={m} jobs={jobs}");
            }
            for k in [0, 1, 2, 5, 10, 50] {
                let budget = SearchBudget::nodes(k);
                assert_eq!(
                    find_decomposition_parallel(&t, budget, 3).unwrap(),
                    find_decomposition(&t, budget).unwrap(),
                    "m={m} k={k}"
                );
            }
        }
    }

    #[test]
    fn rotation_tournaments_are_found() {
        for m in [3, 5, 7, 9] {
            let t = rotation_tournament(m).unwrap();
            let out = find_decomposition(&t, SearchBudget::unlimited()).unwrap();
            assert_eq!(out.status, SearchStatus::Decomposed, "m={m}");
            assert!(verify_decomposition(&t, out.decomposition.as_ref().unwrap()).is_ok());
        }
    }
}
