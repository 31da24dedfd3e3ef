//! Constant-step circuits of the leading tournament.
//!
//! Walking `1, 1 + a, 1 + 2a, ...` modulo `m` uses only edges of distance
//! `a`. When `gcd(a, m) = 1` the walk is a Hamilton circuit; otherwise it
//! splits into `gcd(a, m)` disjoint cycles of length `m / gcd(a, m)`. For
//! prime `m` the steps `1..=n` therefore decompose the leading tournament,
//! and for composite `m` the non-coprime steps are left over as a residue.

use crate::error::{Error, Result};
use crate::tournament::{check_order, DirectedEdge, VertexId};

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Deterministic trial division.
pub fn is_prime(m: usize) -> bool {
    if m < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A step `alpha` in `1..=n` for a tournament of order `m = 2n + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StepValue {
    alpha: usize,
    order: usize,
}

impl StepValue {
    pub fn new(alpha: usize, order: usize) -> Result<Self> {
        check_order(order)?;
        let half = (order - 1) / 2;
        if alpha == 0 || alpha > half {
            return Err(Error::StepOutOfRange { alpha, order, half });
        }
        Ok(StepValue { alpha, order })
    }

    pub fn alpha(self) -> usize {
        self.alpha
    }

    pub fn order(self) -> usize {
        self.order
    }

    pub fn gcd(self) -> usize {
        gcd(self.alpha, self.order)
    }

    pub fn is_coprime(self) -> bool {
        self.gcd() == 1
    }

    /// Successor of `v` under `x -> ((x - 1 + alpha) mod m) + 1`.
    pub fn advance(self, v: VertexId) -> VertexId {
        VertexId::new((v.label() - 1 + self.alpha) % self.order + 1)
    }
}

/// Rotates a cyclic vertex sequence so that it starts at its smallest label.
pub fn canonical_rotation(mut cycle: Vec<VertexId>) -> Vec<VertexId> {
    if let Some(pos) = cycle
        .iter()
        .enumerate()
        .min_by_key(|(_, v)| **v)
        .map(|(i, _)| i)
    {
        cycle.rotate_left(pos);
    }
    cycle
}

/// Edges of a cyclic vertex sequence, including the closing edge.
pub fn cycle_edges(cycle: &[VertexId]) -> impl Iterator<Item = DirectedEdge> + '_ {
    let len = cycle.len();
    (0..len).map(move |k| DirectedEdge {
        from: cycle[k],
        to: cycle[(k + 1) % len],
    })
}

/// Directed cycle through every vertex once, rooted at its smallest label.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HamiltonCircuit {
    vertices: Vec<VertexId>,
}

impl HamiltonCircuit {
    /// Wraps a cyclic sequence, re-rooting it at its smallest label. Whether
    /// it really is a Hamilton circuit of some tournament is checked by
    /// [`crate::oracle::verify_decomposition`].
    pub fn from_cycle(vertices: Vec<VertexId>) -> Self {
        HamiltonCircuit {
            vertices: canonical_rotation(vertices),
        }
    }

    pub fn from_labels(labels: &[usize]) -> Self {
        Self::from_cycle(labels.iter().map(|&l| VertexId::new(l)).collect())
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn labels(&self) -> Vec<usize> {
        self.vertices.iter().map(|v| v.label()).collect()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = DirectedEdge> + '_ {
        cycle_edges(&self.vertices)
    }
}

/// The disjoint cycles traced by one step value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleSystem {
    pub step: StepValue,
    /// Each cycle rooted at its minimum; cycles sorted by root.
    pub cycles: Vec<Vec<VertexId>>,
}

impl CycleSystem {
    pub fn is_hamilton(&self) -> bool {
        self.cycles.len() == 1
    }

    pub fn edges(&self) -> impl Iterator<Item = DirectedEdge> + '_ {
        self.cycles.iter().flat_map(|c| cycle_edges(c))
    }
}

/// Edge-disjoint Hamilton circuits plus whatever cycle systems are left.
///
/// With an empty residual this is a Hamilton decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PackingResult {
    pub order: usize,
    pub circuits: Vec<HamiltonCircuit>,
    pub residual: Vec<CycleSystem>,
}

impl PackingResult {
    pub fn is_decomposition(&self) -> bool {
        self.residual.is_empty()
    }

    /// Circuit edges followed by residual edges, with repetitions.
    pub fn edges(&self) -> impl Iterator<Item = DirectedEdge> + '_ {
        self.circuits
            .iter()
            .flat_map(|c| c.edges())
            .chain(self.residual.iter().flat_map(|s| s.edges()))
    }
}

/// Labels `1, 1 + a, 1 + 2a, ..., 1` (length `m + 1`) for a coprime step.
pub fn step_sequence(order: usize, alpha: usize) -> Result<Vec<usize>> {
    let step = StepValue::new(alpha, order)?;
    if !step.is_coprime() {
        return Err(Error::NonCoprimeStep {
            alpha,
            order,
            gcd: step.gcd(),
        });
    }
    Ok((0..=order).map(|k| (k * alpha) % order + 1).collect())
}

/// Orbits of `x -> x + alpha` on `1..=m`, each rooted at its minimum and
/// listed by ascending root.
pub fn step_cycles(order: usize, alpha: usize) -> Result<CycleSystem> {
    let step = StepValue::new(alpha, order)?;
    let mut seen = vec![false; order];
    let mut cycles = Vec::with_capacity(step.gcd());
    for root in (1..=order).map(VertexId::new) {
        if seen[root.index()] {
            continue;
        }
        let mut cycle = Vec::with_capacity(order / step.gcd());
        let mut v = root;
        while !seen[v.index()] {
            seen[v.index()] = true;
            cycle.push(v);
            v = step.advance(v);
        }
        // roots are visited in ascending order, so each orbit already starts at its minimum
        cycles.push(cycle);
    }
    Ok(CycleSystem { step, cycles })
}

/// Hamilton circuit for a coprime step.
pub fn step_circuit(order: usize, alpha: usize) -> Result<HamiltonCircuit> {
    let seq = step_sequence(order, alpha)?;
    Ok(HamiltonCircuit::from_labels(&seq[..order]))
}

/// Hamilton decomposition of the leading tournament of prime order, one
/// circuit per step `1..=n`.
pub fn decompose_prime(order: usize) -> Result<PackingResult> {
    check_order(order)?;
    if !is_prime(order) {
        return Err(Error::CompositeOrder(order));
    }
    let packing = pack_leading(order)?;
    debug_assert!(packing.is_decomposition());
    Ok(packing)
}

/// Coprime steps become circuits; the rest go to the residual.
pub fn pack_leading(order: usize) -> Result<PackingResult> {
    check_order(order)?;
    let half = (order - 1) / 2;
    let mut circuits = Vec::new();
    let mut residual = Vec::new();
    for alpha in 1..=half {
        if gcd(alpha, order) == 1 {
            circuits.push(step_circuit(order, alpha)?);
        } else {
            residual.push(step_cycles(order, alpha)?);
        }
    }
    Ok(PackingResult {
        order,
        circuits,
        residual,
    })
}
