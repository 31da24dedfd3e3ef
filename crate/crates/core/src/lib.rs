//! Hamilton decompositions of diregular tournaments.
//!
//! The crate builds the *leading* diregular tournament on `m = 2n + 1`
//! vertices (vertex `i` beats `j` exactly when `(j - i) mod m` lies in
//! `1..=n`), splits it into edge-disjoint directed Hamilton circuits by
//! constant modular steps, and reports the short cycles that remain when
//! `m` is composite. A second construction rotates a zig-zag base circuit
//! around a fixed center vertex and produces a Hamilton-decomposable
//! diregular tournament for every odd order. An exhaustive backtracking
//! oracle settles the cases the step method cannot.
//!
//! Vertex labels are 1-based on every public surface.
//!
//! ```
//! use hamdecomp::{step, oracle, tournament::Tournament};
//!
//! let t = Tournament::leading(7).unwrap();
//! let packing = step::decompose_prime(7).unwrap();
//! assert_eq!(packing.circuits.len(), 3);
//! assert!(oracle::verify_decomposition(&t, &packing).is_ok());
//! ```

pub mod cli;
pub mod error;
pub mod io;
pub mod oracle;
pub mod rotation;
pub mod step;
pub mod tournament;

pub use error::{Error, Result};
pub use oracle::{
    find_decomposition, verify_decomposition, SearchBudget, SearchOutcome, SearchStatus,
};
pub use rotation::{rotation_decomposition, rotation_tournament};
pub use step::{
    decompose_prime, pack_leading, CycleSystem, HamiltonCircuit, PackingResult, StepValue,
};
pub use tournament::{Didegree, DirectedEdge, EdgeType, Tournament, VertexId};
