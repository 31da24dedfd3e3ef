//! Vertices, directed edges and the dense tournament model.
//!
//! A [`Tournament`] is validated on construction: no loops and exactly one
//! direction per unordered pair. Diregularity is a query, not an invariant,
//! so the same type carries arbitrary tournaments read from disk.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// 1-based vertex label, `v_1 ..= v_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(usize);

impl VertexId {
    /// Panics on label 0; labels are 1-based.
    pub fn new(label: usize) -> Self {
        assert!(label >= 1, "vertex labels are 1-based");
        VertexId(label)
    }

    pub fn label(self) -> usize {
        self.0
    }

    pub(crate) fn from_index(index: usize) -> Self {
        VertexId(index + 1)
    }

    pub(crate) fn index(self) -> usize {
        self.0 - 1
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// Ordered pair `from -> to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DirectedEdge {
    pub from: VertexId,
    pub to: VertexId,
}

impl DirectedEdge {
    pub fn new(from: usize, to: usize) -> Self {
        DirectedEdge {
            from: VertexId::new(from),
            to: VertexId::new(to),
        }
    }

    /// Cyclic distance `(to - from) mod order`, in `0..order`.
    pub fn cyclic_distance(&self, order: usize) -> usize {
        (self.to.label() + order - self.from.label() % order) % order
    }
}

impl fmt::Display for DirectedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.from, self.to)
    }
}

/// Distance class of an edge of a leading tournament, in `1..=n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeType(usize);

impl EdgeType {
    pub fn new(distance: usize) -> Self {
        EdgeType(distance)
    }

    pub fn distance(self) -> usize {
        self.0
    }
}

impl fmt::Display for EdgeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "type {}", self.0)
    }
}

/// `(in_degree, out_degree)` of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Didegree {
    pub in_degree: usize,
    pub out_degree: usize,
}

pub fn check_order(order: usize) -> Result<()> {
    if order < 3 || order % 2 == 0 {
        return Err(Error::InvalidOrder(order));
    }
    Ok(())
}

/// Dense set of directed edges over `order` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSet {
    order: usize,
    bits: Vec<bool>,
}

impl EdgeSet {
    pub fn new(order: usize) -> Self {
        EdgeSet {
            order,
            bits: vec![false; order * order],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Returns `false` if the edge was already present.
    pub fn insert(&mut self, e: DirectedEdge) -> bool {
        let slot = &mut self.bits[e.from.index() * self.order + e.to.index()];
        !std::mem::replace(slot, true)
    }

    pub fn contains(&self, e: DirectedEdge) -> bool {
        self.bits[e.from.index() * self.order + e.to.index()]
    }

    pub fn len(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.bits.iter().any(|&b| b)
    }

    /// Edges in `(from, to)` order.
    pub fn iter(&self) -> impl Iterator<Item = DirectedEdge> + '_ {
        let m = self.order;
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(move |(k, _)| DirectedEdge {
                from: VertexId::from_index(k / m),
                to: VertexId::from_index(k % m),
            })
    }
}

impl FromIterator<DirectedEdge> for EdgeSet {
    /// Order is taken from the largest label seen.
    fn from_iter<I: IntoIterator<Item = DirectedEdge>>(iter: I) -> Self {
        let edges: Vec<_> = iter.into_iter().collect();
        let order = edges
            .iter()
            .map(|e| e.from.label().max(e.to.label()))
            .max()
            .unwrap_or(0);
        let mut set = EdgeSet::new(order);
        for e in edges {
            set.insert(e);
        }
        set
    }
}

/// Complete oriented graph on an odd number of vertices.
///
/// Row `i`, column `j` of the adjacency is set when `v_i -> v_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    order: usize,
    adjacency: Vec<bool>,
}

impl Tournament {
    /// Builds a tournament from a predicate on 1-based labels, enforcing the
    /// tournament axioms.
    pub fn from_fn(order: usize, mut beats: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        check_order(order)?;
        let mut adjacency = vec![false; order * order];
        for i in 0..order {
            for j in 0..order {
                adjacency[i * order + j] = beats(i + 1, j + 1);
            }
        }
        let t = Tournament { order, adjacency };
        t.check_axioms()?;
        Ok(t)
    }

    /// Builds a tournament from an edge list; every unordered pair must be
    /// covered exactly once.
    pub fn from_edges(order: usize, edges: impl IntoIterator<Item = DirectedEdge>) -> Result<Self> {
        check_order(order)?;
        let mut adjacency = vec![false; order * order];
        for e in edges {
            for v in [e.from, e.to] {
                if v.label() > order {
                    return Err(Error::VertexOutOfRange {
                        vertex: v.label(),
                        order,
                    });
                }
            }
            adjacency[e.from.index() * order + e.to.index()] = true;
        }
        let t = Tournament { order, adjacency };
        t.check_axioms()?;
        Ok(t)
    }

    /// Builds a tournament from 0/1 rows.
    pub fn from_rows(rows: &[Vec<bool>]) -> Result<Self> {
        let order = rows.len();
        Tournament::from_fn(order, |i, j| {
            rows[i - 1].get(j - 1).copied().unwrap_or(false)
        })
    }

    /// The leading diregular tournament: `v_i -> v_j` iff
    /// `(j - i) mod m` is in `1..=(m - 1) / 2`.
    pub fn leading(order: usize) -> Result<Self> {
        check_order(order)?;
        let half = (order - 1) / 2;
        Tournament::from_fn(order, |i, j| {
            let d = (j + order - i) % order;
            (1..=half).contains(&d)
        })
    }

    fn check_axioms(&self) -> Result<()> {
        let m = self.order;
        for i in 0..m {
            if self.adjacency[i * m + i] {
                return Err(Error::Loop(VertexId::from_index(i)));
            }
            for j in i + 1..m {
                let a = VertexId::from_index(i);
                let b = VertexId::from_index(j);
                match (self.adjacency[i * m + j], self.adjacency[j * m + i]) {
                    (true, true) => return Err(Error::BidirectionalPair(a, b)),
                    (false, false) => return Err(Error::MissingPair(a, b)),
                    _ => {}
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `n` in `m = 2n + 1`.
    pub fn half(&self) -> usize {
        (self.order - 1) / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (1..=self.order).map(VertexId::new)
    }

    pub fn vertex(&self, label: usize) -> Result<VertexId> {
        if label == 0 || label > self.order {
            return Err(Error::VertexOutOfRange {
                vertex: label,
                order: self.order,
            });
        }
        Ok(VertexId::new(label))
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v.label() <= self.order
    }

    pub fn has_edge(&self, e: DirectedEdge) -> bool {
        self.contains_vertex(e.from)
            && self.contains_vertex(e.to)
            && self.adjacency[e.from.index() * self.order + e.to.index()]
    }

    /// Out-neighbours of `v` in ascending label order.
    pub fn out_neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        let row = v.index() * self.order;
        (0..self.order)
            .filter(move |&j| self.adjacency[row + j])
            .map(VertexId::from_index)
    }

    /// All edges sorted by `(from, to)`.
    pub fn edges(&self) -> impl Iterator<Item = DirectedEdge> + '_ {
        self.vertices().flat_map(move |from| {
            self.out_neighbors(from)
                .map(move |to| DirectedEdge { from, to })
        })
    }

    pub fn edge_set(&self) -> EdgeSet {
        let mut set = EdgeSet::new(self.order);
        for e in self.edges() {
            set.insert(e);
        }
        set
    }

    /// Rows of the adjacency matrix as 0/1 bytes.
    pub fn rows(&self) -> Vec<Vec<u8>> {
        self.adjacency
            .chunks(self.order)
            .map(|row| row.iter().map(|&b| b as u8).collect())
            .collect()
    }

    pub fn didegree(&self, v: VertexId) -> Result<Didegree> {
        if !self.contains_vertex(v) {
            return Err(Error::VertexOutOfRange {
                vertex: v.label(),
                order: self.order,
            });
        }
        let m = self.order;
        let k = v.index();
        let out_degree = (0..m).filter(|&j| self.adjacency[k * m + j]).count();
        let in_degree = (0..m).filter(|&i| self.adjacency[i * m + k]).count();
        Ok(Didegree {
            in_degree,
            out_degree,
        })
    }

    pub fn is_diregular(&self) -> bool {
        self.check_diregular().is_ok()
    }

    /// Like [`is_diregular`](Self::is_diregular) but names the first offending vertex.
    pub fn check_diregular(&self) -> Result<()> {
        let n = self.half();
        for v in self.vertices() {
            let d = self.didegree(v)?;
            if d.in_degree != n || d.out_degree != n {
                return Err(Error::NotDiregular {
                    vertex: v,
                    in_degree: d.in_degree,
                    out_degree: d.out_degree,
                });
            }
        }
        Ok(())
    }

    /// Distance class of `e`; fails if `e` is absent or its cyclic distance
    /// exceeds `n`, which cannot happen in a leading tournament.
    pub fn edge_type(&self, e: DirectedEdge) -> Result<EdgeType> {
        if !self.has_edge(e) {
            return Err(Error::EdgeNotPresent(e));
        }
        let distance = e.cyclic_distance(self.order);
        let half = self.half();
        if distance > half {
            return Err(Error::NotLeadingEdge {
                edge: e,
                distance,
                half,
            });
        }
        Ok(EdgeType(distance))
    }

    /// The `m` edges `v_i -> v_{i+ty}` (indices mod `m`), for `i = 1..=m`.
    pub fn edges_of_type(&self, ty: EdgeType) -> Result<Vec<DirectedEdge>> {
        let m = self.order;
        let half = self.half();
        if ty.0 == 0 || ty.0 > half {
            return Err(Error::StepOutOfRange {
                alpha: ty.0,
                order: m,
                half,
            });
        }
        (1..=m)
            .map(|i| {
                let e = DirectedEdge::new(i, (i - 1 + ty.0) % m + 1);
                if self.has_edge(e) {
                    Ok(e)
                } else {
                    Err(Error::EdgeNotPresent(e))
                }
            })
            .collect()
    }
}

/// Free-function alias of [`Tournament::leading`].
pub fn build_leading_tournament(order: usize) -> Result<Tournament> {
    Tournament::leading(order)
}
