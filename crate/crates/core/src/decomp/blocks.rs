use crate::graph::{Graph, VertexSet};

/// Maximal 2-connected subgraphs, bridges (2-vertex blocks) and isolated
/// vertices (1-vertex blocks). Every edge lies in exactly one block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
}

impl BlockDecomposition {
    /// `sum_i |B_i|`, at most `n + 2m`.
    pub fn total_size(&self) -> usize {
        self.blocks.iter().map(VertexSet::len).sum()
    }
}

/// Hopcroft–Tarjan biconnected components with an explicit DFS stack.
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    const UNSEEN: usize = usize::MAX;
    let n = g.vertex_count();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0;
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    // (vertex, parent, next neighbor index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();

    for root in g.vertices() {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        if g.degree(root) == 0 {
            blocks.push(VertexSet::from_sorted(n, vec![root]));
            continue;
        }
        let mut root_children = 0;
        stack.push((root, UNSEEN, 0));
        while let Some(frame) = stack.last_mut() {
            let (v, parent, i) = *frame;
            if let Some(&w) = g.neighbors(v).get(i) {
                frame.2 += 1;
                if disc[w] == UNSEEN {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    edge_stack.push((v, w));
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            if parent == UNSEEN {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                if parent != root {
                    is_cut[parent] = true;
                }
                let mut members = Vec::new();
                while let Some((a, b)) = edge_stack.pop() {
                    members.push(a);
                    members.push(b);
                    if (a, b) == (parent, v) {
                        break;
                    }
                }
                members.sort_unstable();
                members.dedup();
                blocks.push(VertexSet::from_sorted(n, members));
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }
    BlockDecomposition {
        blocks,
        cut_vertices: VertexSet::from_flags(&is_cut),
    }
}
