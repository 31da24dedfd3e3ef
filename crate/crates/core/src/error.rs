use thiserror::Error;

use crate::tournament::{DirectedEdge, VertexId};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid order {0}: a diregular tournament needs an odd order of at least 3")]
    InvalidOrder(usize),

    #[error("vertex {vertex} is out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("loop at vertex {0}")]
    Loop(VertexId),

    #[error("pair ({0}, {1}) is joined in both directions")]
    BidirectionalPair(VertexId, VertexId),

    #[error("pair ({0}, {1}) is joined in neither direction")]
    MissingPair(VertexId, VertexId),

    #[error("edge {0} is not an edge of the tournament")]
    EdgeNotPresent(DirectedEdge),

    #[error("edge {edge} has cyclic distance {distance}, larger than {half}; the tournament is not a leading tournament")]
    NotLeadingEdge {
        edge: DirectedEdge,
        distance: usize,
        half: usize,
    },

    #[error("step {alpha} is outside 1..={half} for order {order}")]
    StepOutOfRange {
        alpha: usize,
        order: usize,
        half: usize,
    },

    #[error("step {alpha} shares the factor {gcd} with order {order}; use step_cycles for non-coprime steps")]
    NonCoprimeStep {
        alpha: usize,
        order: usize,
        gcd: usize,
    },

    #[error("order {0} is composite; the step method only decomposes prime orders (use `pack` for the residual analysis or `search` for the oracle)")]
    CompositeOrder(usize),

    #[error("the tournament is not diregular (vertex {vertex} has in-degree {in_degree}, out-degree {out_degree})")]
    NotDiregular {
        vertex: VertexId,
        in_degree: usize,
        out_degree: usize,
    },

    #[error("exhaustive search above order {ceiling} requires a node or time budget (order {order} given)")]
    BudgetRequired { order: usize, ceiling: usize },

    #[error("matrix parse error at row {row}, column {col}: {message}")]
    MatrixParse {
        row: usize,
        col: usize,
        message: String,
    },

    #[error("json error at {path}: {message}")]
    Json { path: String, message: String },

    #[error("export style mismatch: {0}")]
    StyleMismatch(String),
}
