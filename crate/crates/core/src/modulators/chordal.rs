use crate::decomp::{chordality_check, Chordality};
use crate::graph::{Graph, VertexSet};

use super::{Method, Modulator, TargetClass};

/// Hits chordless cycles one at a time: from each witness cycle, deletes the
/// vertex of largest degree in the current graph (smallest id on ties).
pub fn chordal_modulator_greedy(g: &Graph) -> Modulator {
    let mut removed = vec![false; g.vertex_count()];
    loop {
        let (rest, map) = g.without(&removed);
        match chordality_check(&rest) {
            Chordality::Chordal(_) => break,
            Chordality::NotChordal(cycle) => {
                let pick = cycle
                    .iter()
                    .copied()
                    .max_by_key(|&u| (rest.degree(u), std::cmp::Reverse(map[u])))
                    .expect("witness cycles are non-empty");
                removed[map[pick]] = true;
            }
        }
    }
    Modulator {
        vertices: VertexSet::from_flags(&removed),
        target: TargetClass::Chordal,
        method: Method::Greedy,
    }
}
