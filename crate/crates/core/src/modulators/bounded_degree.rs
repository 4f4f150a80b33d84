use crate::graph::{Graph, VertexSet};

use super::{Method, Modulator, TargetClass};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundedDegreeOutcome {
    /// `|X| <= p(p+d+1)` and `G - X` has maximum degree at most `d`.
    Found(Modulator),
    /// Every set whose removal leaves maximum degree `d` has more than `p`
    /// vertices.
    No,
}

/// Approximate deletion set to maximum degree `d`, relative to a guess `p`.
///
/// Vertices of degree at least `p+d+1` belong to every solution of size `p`,
/// so more than `p` of them means "No". After removing those `h` vertices,
/// each of the at most `p-h` remaining solution vertices accounts for itself
/// and at most `p+d` neighbors, so more than `(p-h)(p+d+1)` vertices of degree
/// above `d` also means "No". Otherwise all of them together form `X`.
pub fn bounded_degree_modulator(g: &Graph, d: usize, p: usize) -> BoundedDegreeOutcome {
    let n = g.vertex_count();
    let forced: Vec<usize> = g.vertices().filter(|&v| g.degree(v) > p + d).collect();
    if forced.len() > p {
        return BoundedDegreeOutcome::No;
    }
    let mut removed = vec![false; n];
    for &v in &forced {
        removed[v] = true;
    }
    let residual_degree = |v: usize| g.neighbors(v).iter().filter(|&&w| !removed[w]).count();
    let heavy: Vec<usize> = g
        .vertices()
        .filter(|&v| !removed[v] && residual_degree(v) > d)
        .collect();
    if heavy.len() > (p - forced.len()) * (p + d + 1) {
        return BoundedDegreeOutcome::No;
    }
    let mut members = forced;
    members.extend(heavy);
    members.sort_unstable();
    BoundedDegreeOutcome::Found(Modulator {
        vertices: VertexSet::from_sorted(n, members),
        target: TargetClass::MaxDegree(d),
        method: Method::Approx,
    })
}
