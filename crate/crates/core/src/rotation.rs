//! Rotational Hamilton decompositions for every odd order.
//!
//! Vertex `v_1` sits at the center of a circle and `v_2 ..= v_{2n+1}` sit
//! on it, `v_2` and `v_{2n+1}` at opposite ends of a diameter. Odd labels
//! `v_3, v_5, ...` follow `v_2` clockwise and even labels `v_4, v_6, ...`
//! follow it anticlockwise, so the base circuit `v_1 -> v_2 -> ... -> v_m`
//! zig-zags across the circle. Turning the edge pattern by one position at
//! a time, `n - 1` times, yields `n` circuits that use every unordered pair
//! exactly once; orienting pairs along the circuits gives a diregular
//! tournament with a Hamilton decomposition built in.
//!
//! The angles only serve as a labelling device, so everything here is
//! expressed through the rotation permutation.

use crate::error::Result;
use crate::step::{HamiltonCircuit, PackingResult};
use crate::tournament::{check_order, Tournament, VertexId};

/// Clockwise order of the circle vertices, starting at `v_2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationLayout {
    order: usize,
    circle_positions: Vec<VertexId>,
}

impl RotationLayout {
    pub fn new(order: usize) -> Result<Self> {
        check_order(order)?;
        let odd_clockwise = (3..=order).step_by(2);
        let even_back = (4..order).step_by(2).rev();
        let circle_positions = std::iter::once(2)
            .chain(odd_clockwise)
            .chain(even_back)
            .map(VertexId::new)
            .collect();
        Ok(RotationLayout {
            order,
            circle_positions,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn circle_positions(&self) -> &[VertexId] {
        &self.circle_positions
    }
}

/// Bijection on `1..=m` fixing `v_1` that moves each circle vertex one
/// position clockwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationPermutation {
    // image[k] is the image of label k + 1
    image: Vec<VertexId>,
}

impl RotationPermutation {
    pub fn from_layout(layout: &RotationLayout) -> Self {
        let mut image: Vec<VertexId> = (1..=layout.order).map(VertexId::new).collect();
        let ring = &layout.circle_positions;
        for (k, &v) in ring.iter().enumerate() {
            image[v.index()] = ring[(k + 1) % ring.len()];
        }
        RotationPermutation { image }
    }

    pub fn identity(order: usize) -> Self {
        RotationPermutation {
            image: (1..=order).map(VertexId::new).collect(),
        }
    }

    pub fn apply(&self, v: VertexId) -> VertexId {
        self.image[v.index()]
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Self) -> Self {
        RotationPermutation {
            image: other.image.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::identity(self.image.len()), |acc, _| {
            self.compose(&acc)
        })
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(k, v)| v.index() == k)
    }

    /// Smallest `k >= 1` with `self^k = id`.
    pub fn period(&self) -> usize {
        let mut k = 1;
        let mut p = self.clone();
        while !p.is_identity() {
            p = self.compose(&p);
            k += 1;
        }
        k
    }

    pub fn apply_circuit(&self, c: &HamiltonCircuit) -> HamiltonCircuit {
        HamiltonCircuit::from_cycle(c.vertices().iter().map(|&v| self.apply(v)).collect())
    }
}

/// `v_1 -> v_2 -> ... -> v_m -> v_1`.
pub fn base_circuit(order: usize) -> Result<HamiltonCircuit> {
    check_order(order)?;
    Ok(HamiltonCircuit::from_cycle(
        (1..=order).map(VertexId::new).collect(),
    ))
}

pub fn rotation_permutation(order: usize) -> Result<RotationPermutation> {
    Ok(RotationPermutation::from_layout(&RotationLayout::new(
        order,
    )?))
}

/// The base circuit and its first `n - 1` rotations.
pub fn rotation_decomposition(order: usize) -> Result<PackingResult> {
    let base = base_circuit(order)?;
    let sigma = rotation_permutation(order)?;
    let half = (order - 1) / 2;
    let mut circuits = Vec::with_capacity(half);
    let mut current = base;
    for _ in 0..half {
        let next = sigma.apply_circuit(&current);
        circuits.push(current);
        current = next;
    }
    Ok(PackingResult {
        order,
        circuits,
        residual: Vec::new(),
    })
}

/// The tournament whose edges are exactly the rotated circuits.
pub fn rotation_tournament(order: usize) -> Result<Tournament> {
    let packing = rotation_decomposition(order)?;
    Tournament::from_edges(order, packing.edges())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::tournament::{DirectedEdge, EdgeSet};

    fn labels(vs: &[VertexId]) -> Vec<usize> {
        vs.iter().map(|v| v.label()).collect()
    }

    #[test]
    fn layout_for_nine() {
        let l = RotationLayout::new(9).unwrap();
        assert_eq!(labels(l.circle_positions()), vec![2, 3, 5, 7, 9, 8, 6, 4]);
        // v_2 and v_9 are diametrically opposite
        assert_eq!(l.circle_positions()[4], VertexId::new(9));
        assert_eq!(
            labels(RotationLayout::new(3).unwrap().circle_positions()),
            vec![2, 3]
        );
    }

    #[test]
    fn layout_is_a_permutation_of_circle_vertices() {
        for m in (3..=41).step_by(2) {
            let l = RotationLayout::new(m).unwrap();
            let mut sorted = labels(l.circle_positions());
            assert_eq!(sorted[0], 2);
            assert_eq!(sorted[(m - 1) / 2], m, "v_m opposite v_2 for m={m}");
            sorted.sort();
            assert_eq!(sorted, (2..=m).collect::<Vec<_>>());
        }
    }

    #[test]
    fn sigma_for_nine() {
        let s = rotation_permutation(9).unwrap();
        let images: Vec<_> = (1..=9).map(|l| s.apply(VertexId::new(l)).label()).collect();
        // cycle (2 3 5 7 9 8 6 4), 1 fixed
        assert_eq!(images, vec![1, 3, 5, 2, 7, 4, 9, 6, 8]);
        assert!(s.pow(8).is_identity());
        assert!(!s.pow(4).is_identity());
    }

    #[test]
    fn sigma_for_three_swaps() {
        let s = rotation_permutation(3).unwrap();
        let images: Vec<_> = (1..=3).map(|l| s.apply(VertexId::new(l)).label()).collect();
        assert_eq!(images, vec![1, 3, 2]);
    }

    #[test]
    fn sigma_has_period_2n_and_fixes_center() {
        for m in (3..=41).step_by(2) {
            let s = rotation_permutation(m).unwrap();
            assert_eq!(s.apply(VertexId::new(1)), VertexId::new(1));
            assert_eq!(s.period(), m - 1, "m={m}");
        }
    }

    #[test]
    fn base_circuits() {
        assert_eq!(
            base_circuit(9).unwrap().labels(),
            (1..=9).collect::<Vec<_>>()
        );
        assert_eq!(base_circuit(3).unwrap().labels(), vec![1, 2, 3]);
        assert_eq!(
            base_circuit(7).unwrap().labels(),
            (1..=7).collect::<Vec<_>>()
        );
        assert_eq!(base_circuit(6), Err(Error::InvalidOrder(6)));
    }

    #[test]
    fn first_rotation_for_nine() {
        let p = rotation_decomposition(9).unwrap();
        assert_eq!(p.circuits.len(), 4);
        assert_eq!(p.circuits[1].labels(), vec![1, 3, 5, 2, 7, 4, 9, 6, 8]);
        assert_eq!(&p.circuits[1].labels()[..4], &[1, 3, 5, 2]);
        // closes through v_{2n} = v_8
        assert_eq!(*p.circuits[1].labels().last().unwrap(), 8);
    }

    #[test]
    fn no_shared_or_antiparallel_edges() {
        for m in (3..=25).step_by(2) {
            let p = rotation_decomposition(m).unwrap();
            assert_eq!(p.circuits.len(), (m - 1) / 2);
            for (j, a) in p.circuits.iter().enumerate() {
                for b in &p.circuits[j + 1..] {
                    for e in a.edges() {
                        let rev = DirectedEdge {
                            from: e.to,
                            to: e.from,
                        };
                        assert!(!b.edges().any(|f| f == e || f == rev), "m={m}: {e}");
                    }
                }
            }
        }
    }

    #[test]
    fn union_is_a_diregular_tournament() {
        for m in (3..=25).step_by(2) {
            let p = rotation_decomposition(m).unwrap();
            let edges: EdgeSet = p.edges().collect();
            assert_eq!(edges.len(), m * (m - 1) / 2);
            for c in &p.circuits {
                let mut vs = c.labels();
                assert_eq!(vs[0], 1);
                vs.sort();
                assert_eq!(vs, (1..=m).collect::<Vec<_>>());
            }
            let t = rotation_tournament(m).unwrap();
            assert!(t.is_diregular(), "m={m}");
        }
    }

    #[test]
    fn order_three_is_the_leading_triangle() {
        assert_eq!(
            rotation_tournament(3).unwrap(),
            Tournament::leading(3).unwrap()
        );
    }
}
