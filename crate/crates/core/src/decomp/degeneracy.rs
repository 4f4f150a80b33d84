use std::collections::BTreeSet;

use crate::graph::{Graph, VertexSet};

/// Peeling order: every vertex has at most `degeneracy` neighbors later in
/// `order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyOrdering {
    pub order: Vec<usize>,
    /// `position[v]` is the index of `v` in `order`.
    pub position: Vec<usize>,
    pub degeneracy: usize,
}

/// Repeatedly removes a vertex of minimum remaining degree, smallest id first.
pub fn degeneracy_ordering(g: &Graph) -> DegeneracyOrdering {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut queue: BTreeSet<(usize, usize)> = g.vertices().map(|v| (deg[v], v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut degeneracy = 0;
    while let Some((d, v)) = queue.pop_first() {
        degeneracy = degeneracy.max(d);
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                queue.remove(&(deg[w], w));
                deg[w] -= 1;
                queue.insert((deg[w], w));
            }
        }
    }
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    DegeneracyOrdering {
        order,
        position,
        degeneracy,
    }
}

/// `v` together with its neighbors that come after it in `ord`.
pub fn later_closed_neighborhood(g: &Graph, ord: &DegeneracyOrdering, v: usize) -> VertexSet {
    let mut members: Vec<usize> = g
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&w| ord.position[w] > ord.position[v])
        .collect();
    members.push(v);
    members.sort_unstable();
    VertexSet::from_sorted(g.vertex_count(), members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    /// Minimum over all orderings of the largest forward degree, by dynamic
    /// programming over vertex subsets: place some `v` first among `S`, then
    /// order `S - v` optimally.
    fn exhaustive_degeneracy(g: &Graph) -> usize {
        let n = g.vertex_count();
        let mut nbr_mask = vec![0u32; n];
        for (u, v) in g.edges() {
            nbr_mask[u] |= 1 << v;
            nbr_mask[v] |= 1 << u;
        }
        let mut best = vec![0usize; 1 << n];
        for s in 1usize..(1 << n) {
            best[s] = (0..n)
                .filter(|&v| s >> v & 1 == 1)
                .map(|v| {
                    let rest = s & !(1 << v);
                    ((nbr_mask[v] as usize & rest).count_ones() as usize).max(best[rest])
                })
                .min()
                .unwrap();
        }
        best[(1 << n) - 1]
    }

    fn check_ordering(g: &Graph, ord: &DegeneracyOrdering) {
        let mut sorted = ord.order.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, g.vertices().collect::<Vec<_>>());
        let forward: Vec<usize> = g
            .vertices()
            .map(|v| later_closed_neighborhood(g, ord, v).len() - 1)
            .collect();
        assert!(forward.iter().all(|&f| f <= ord.degeneracy));
        if g.vertex_count() > 0 {
            assert!(forward.contains(&ord.degeneracy));
        }
    }

    #[test]
    fn examples() {
        let forest = Graph::from_edges(7, [(0, 1), (1, 2), (1, 3), (4, 5)]).unwrap();
        assert_eq!(degeneracy_ordering(&forest).degeneracy, 1);
        assert_eq!(degeneracy_ordering(&Graph::complete(5)).degeneracy, 4);
        assert_eq!(degeneracy_ordering(&Graph::cycle(4)).degeneracy, 2);
        assert_eq!(degeneracy_ordering(&Graph::empty(3)).degeneracy, 0);
        assert_eq!(
            degeneracy_ordering(&Graph::empty(0)).order,
            Vec::<usize>::new()
        );
    }

    #[test]
    fn later_closed_neighborhood_examples() {
        let k4 = Graph::complete(4);
        let ord = degeneracy_ordering(&k4);
        let last = *ord.order.last().unwrap();
        assert_eq!(
            later_closed_neighborhood(&k4, &ord, last).members(),
            &[last]
        );
        assert_eq!(later_closed_neighborhood(&k4, &ord, ord.order[0]).len(), 4);

        // P3 = 0-1-2: endpoint 0 is peeled first, then the midpoint
        let p3 = Graph::path(3);
        let ord = degeneracy_ordering(&p3);
        assert_eq!(ord.order, vec![0, 1, 2]);
        assert_eq!(later_closed_neighborhood(&p3, &ord, 1).members(), &[1, 2]);
    }

    #[test]
    fn ties_go_to_smallest_id() {
        let ord = degeneracy_ordering(&Graph::cycle(5));
        assert_eq!(ord.order[0], 0);
    }

    #[test]
    fn peeling_matches_exhaustive_minimum() {
        for seed in 0..300u64 {
            let n = 1 + (seed as usize % 9);
            let p = [0.2, 0.4, 0.6, 0.85][(seed / 9) as usize % 4];
            let g = generators::gnp(n, p, seed);
            let ord = degeneracy_ordering(&g);
            check_ordering(&g, &ord);
            assert_eq!(ord.degeneracy, exhaustive_degeneracy(&g), "seed {seed}");
        }
    }
}
