use std::collections::VecDeque;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    /// Side (0 or 1) of every vertex.
    Bipartite(Vec<u8>),
    /// Vertices of a simple odd cycle, in cyclic order.
    OddCycle(Vec<usize>),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite(_))
    }
}

/// BFS two-coloring. On failure the witness is the odd cycle closed by the
/// first monochromatic edge through the two BFS tree paths.
pub fn is_bipartite(g: &Graph) -> Bipartiteness {
    const UNSEEN: u8 = u8::MAX;
    let n = g.vertex_count();
    let mut side = vec![UNSEEN; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();
    for root in g.vertices() {
        if side[root] != UNSEEN {
            continue;
        }
        side[root] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if side[w] == UNSEEN {
                    side[w] = 1 - side[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return Bipartiteness::OddCycle(tree_cycle(&parent, &depth, u, w));
                }
            }
        }
    }
    Bipartiteness::Bipartite(side)
}

/// Cycle formed by the edge `u`-`w` and the tree paths up to their common
/// ancestor.
fn tree_cycle(parent: &[usize], depth: &[usize], u: usize, w: usize) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}
