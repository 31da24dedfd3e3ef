mod common;

use proptest::prelude::*;

use hamdecomp::io::{export_dot, export_json, export_matrix, parse_json, parse_matrix, Coloring};
use hamdecomp::oracle::{find_decomposition, verify_decomposition, SearchBudget, SearchStatus};
use hamdecomp::step::{pack_leading, step_cycles, HamiltonCircuit, PackingResult};
use hamdecomp::tournament::{DirectedEdge, Tournament, VertexId};

fn odd_order(max: usize) -> impl Strategy<Value = usize> {
    (1..=(max - 1) / 2).prop_map(|n| 2 * n + 1)
}

/// Random orientation of every pair.
fn random_tournament(max: usize) -> impl Strategy<Value = Tournament> {
    odd_order(max).prop_flat_map(|m| {
        proptest::collection::vec(any::<bool>(), m * (m - 1) / 2).prop_map(move |flips| {
            let mut k = 0;
            let mut edges = Vec::new();
            for i in 1..=m {
                for j in i + 1..=m {
                    edges.push(if flips[k] {
                        DirectedEdge::new(i, j)
                    } else {
                        DirectedEdge::new(j, i)
                    });
                    k += 1;
                }
            }
            Tournament::from_edges(m, edges).unwrap()
        })
    })
}

/// Random cyclic sequences over `1..=m`, not necessarily valid circuits.
fn random_packing(max: usize) -> impl Strategy<Value = PackingResult> {
    odd_order(max).prop_flat_map(|m| {
        let cycle = proptest::collection::vec(1..=m, 1..=m);
        (
            proptest::collection::vec(cycle, 0..4),
            proptest::collection::vec(1..=(m - 1) / 2, 0..3),
        )
            .prop_map(move |(cs, steps)| PackingResult {
                order: m,
                circuits: cs
                    .into_iter()
                    .map(|c| {
                        HamiltonCircuit::from_cycle(c.into_iter().map(VertexId::new).collect())
                    })
                    .collect(),
                residual: steps
                    .into_iter()
                    .map(|a| step_cycles(m, a).unwrap())
                    .collect(),
            })
    })
}

proptest! {
    #[test]
    fn tournament_axioms_hold(t in random_tournament(31)) {
        let m = t.order();
        for i in 1..=m {
            prop_assert!(!t.has_edge(DirectedEdge::new(i, i)));
            for j in (1..=m).filter(|&j| j != i) {
                let forward = t.has_edge(DirectedEdge::new(i, j)) as u8;
                let back = t.has_edge(DirectedEdge::new(j, i)) as u8;
                prop_assert_eq!(forward + back, 1);
            }
            let d = t.didegree(VertexId::new(i)).unwrap();
            prop_assert_eq!(d.in_degree + d.out_degree, m - 1);
        }
    }

    #[test]
    fn matrix_round_trip(t in random_tournament(31)) {
        prop_assert_eq!(parse_matrix(&export_matrix(&t)).unwrap(), t);
    }

    #[test]
    fn json_round_trip(p in random_packing(31)) {
        prop_assert_eq!(parse_json(&export_json(&p)).unwrap(), p);
    }

    #[test]
    fn dot_is_well_formed(t in random_tournament(15)) {
        let dot = export_dot(&t, None, Coloring::None).unwrap();
        prop_assert!(common::is_valid_dot(&dot));
        prop_assert_eq!(dot.matches(" -> ").count(), t.edges().count());
    }

    /// Reversing any single circuit edge of a valid packing is caught.
    #[test]
    fn verifier_catches_a_flipped_edge(m in odd_order(25), pick in any::<prop::sample::Index>()) {
        let t = Tournament::leading(m).unwrap();
        let mut p = pack_leading(m).unwrap();
        prop_assert!(verify_decomposition(&t, &p).is_ok());
        let k = pick.index(p.circuits.len());
        let mut vs = p.circuits[k].vertices().to_vec();
        vs.reverse();
        p.circuits[k] = HamiltonCircuit::from_cycle(vs);
        prop_assert!(!verify_decomposition(&t, &p).is_ok());
    }

    /// Growing the node budget never changes a definite answer.
    #[test]
    fn budget_monotonicity(m in odd_order(9), small in 0u64..400, extra in 0u64..400) {
        let t = Tournament::leading(m).unwrap();
        let a = find_decomposition(&t, SearchBudget::nodes(small)).unwrap();
        let b = find_decomposition(&t, SearchBudget::nodes(small + extra)).unwrap();
        if a.status != SearchStatus::BudgetExceeded {
            prop_assert_eq!(a, b);
        }
    }
}
