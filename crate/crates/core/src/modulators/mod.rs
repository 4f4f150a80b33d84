//! Vertex deletion sets into bipartite, bounded-degree and chordal graphs.

mod bounded_degree;
mod chordal;
mod oct;

use serde::{Deserialize, Serialize};

pub use bounded_degree::{bounded_degree_modulator, BoundedDegreeOutcome};
pub use chordal::chordal_modulator_greedy;
pub use oct::{oct_exact, oct_exact_with_limit, oct_heuristic, OctOutcome, DEFAULT_OCT_WORK_LIMIT};

use crate::decomp::{chordality_check, is_bipartite, Chordality};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TargetClass {
    Bipartite,
    MaxDegree(usize),
    Chordal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    Exact,
    Approx,
    Greedy,
}

/// A set `X` such that `G - X` lies in `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Modulator {
    pub vertices: VertexSet,
    pub target: TargetClass,
    pub method: Method,
}

impl Modulator {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Re-checks that `g - X` is in the target class.
    pub fn certify(&self, g: &Graph) -> bool {
        if self.vertices.host_vertex_count() != g.vertex_count() {
            return false;
        }
        let (rest, _) = g.without(&self.vertices.to_flags());
        match self.target {
            TargetClass::Bipartite => is_bipartite(&rest).is_bipartite(),
            TargetClass::MaxDegree(d) => rest.max_degree() <= d,
            TargetClass::Chordal => matches!(chordality_check(&rest), Chordality::Chordal(_)),
        }
    }
}
