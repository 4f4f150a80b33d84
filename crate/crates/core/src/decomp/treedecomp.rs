use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    /// Pairs of bag indices.
    pub tree_edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Largest bag size minus one; `None` when there are no bags.
    pub fn width(&self) -> Option<usize> {
        self.bags
            .iter()
            .map(|b| b.len())
            .max()
            .map(|s| s.saturating_sub(1))
    }

    pub fn max_bag_size(&self) -> usize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// PACE `.td` text with 1-based bag and vertex ids.
    pub fn to_pace(&self, vertex_count: usize) -> String {
        let mut out = format!(
            "s td {} {} {}\n",
            self.bags.len(),
            self.max_bag_size(),
            vertex_count
        );
        for (i, bag) in self.bags.iter().enumerate() {
            let _ = write!(out, "b {}", i + 1);
            for v in bag {
                let _ = write!(out, " {}", v + 1);
            }
            out.push('\n');
        }
        for &(a, b) in &self.tree_edges {
            let _ = writeln!(out, "{} {}", a + 1, b + 1);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("bag {bag} holds vertex {vertex}, which is not in the graph")]
    ForeignVertex { bag: usize, vertex: usize },
    #[error("vertex {0} is in no bag")]
    VertexUncovered(usize),
    #[error("edge {{{0}, {1}}} is in no bag")]
    EdgeUncovered(usize, usize),
    #[error("bags containing vertex {0} are not connected in the tree")]
    Disconnected(usize),
    #[error("tree edges do not form a tree: {0}")]
    NotATree(String),
}

/// Checks vertex coverage, edge coverage, connectivity of every vertex's
/// bags, and that the bag graph is a tree.
pub fn validate_tree_decomposition(td: &TreeDecomposition, g: &Graph) -> Result<(), Violation> {
    let n = g.vertex_count();
    let b = td.bags.len();
    for (i, bag) in td.bags.iter().enumerate() {
        if let Some(&v) = bag.iter().find(|&&v| v >= n) {
            return Err(Violation::ForeignVertex { bag: i, vertex: v });
        }
    }

    // Tree shape: b - 1 edges, valid endpoints, connected.
    let mut tree_adj = vec![Vec::new(); b];
    for &(x, y) in &td.tree_edges {
        if x >= b || y >= b || x == y {
            return Err(Violation::NotATree(format!("bad edge ({x}, {y})")));
        }
        tree_adj[x].push(y);
        tree_adj[y].push(x);
    }
    if b > 0 {
        if td.tree_edges.len() != b - 1 {
            return Err(Violation::NotATree(format!(
                "{} edges for {b} bags",
                td.tree_edges.len()
            )));
        }
        let mut seen = vec![false; b];
        seen[0] = true;
        let mut stack = vec![0];
        let mut reached = 1;
        while let Some(x) = stack.pop() {
            for &y in &tree_adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    stack.push(y);
                }
            }
        }
        if reached != b {
            return Err(Violation::NotATree("bag graph is disconnected".into()));
        }
    } else if !td.tree_edges.is_empty() {
        return Err(Violation::NotATree("edges without bags".into()));
    }

    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            holders[v].push(i);
        }
    }
    if let Some(v) = holders.iter().position(Vec::is_empty) {
        return Err(Violation::VertexUncovered(v));
    }
    for (u, v) in g.edges() {
        if !holders[u].iter().any(|&i| td.bags[i].contains(v)) {
            return Err(Violation::EdgeUncovered(u, v));
        }
    }
    // In a tree, a vertex set induces a connected subtree iff it spans
    // exactly |set| - 1 tree edges.
    for v in g.vertices() {
        let inside = td
            .tree_edges
            .iter()
            .filter(|&&(x, y)| td.bags[x].contains(v) && td.bags[y].contains(v))
            .count();
        if inside + 1 != holders[v].len() {
            return Err(Violation::Disconnected(v));
        }
    }
    Ok(())
}

/// Min-fill elimination. Each eliminated vertex contributes the bag of
/// itself plus its current neighbors, attached to the bag of the neighbor
/// eliminated next. Ties: fewer current neighbors, then smaller id.
pub fn heuristic_tree_decomposition(g: &Graph) -> TreeDecomposition {
    let n = g.vertex_count();
    let mut adj: Vec<BTreeSet<usize>> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut eliminated = vec![false; n];
    let mut fill = vec![0usize; n];
    let mut dirty = vec![true; n];
    let mut step_of = vec![0usize; n];
    let mut elim_order = Vec::with_capacity(n);
    let mut bag_members: Vec<Vec<usize>> = Vec::with_capacity(n);

    for step in 0..n {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in 0..n {
            if eliminated[v] {
                continue;
            }
            if dirty[v] {
                fill[v] = fill_in(&adj, v);
                dirty[v] = false;
            }
            let key = (fill[v], adj[v].len(), v);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        let (_, _, v) = best.expect("a vertex remains");
        let nbrs: Vec<usize> = adj[v].iter().copied().collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        for &a in &nbrs {
            adj[a].remove(&v);
        }
        for &a in &nbrs {
            dirty[a] = true;
            for &b in &adj[a] {
                dirty[b] = true;
            }
        }
        eliminated[v] = true;
        step_of[v] = step;
        elim_order.push(v);
        let mut bag = nbrs.clone();
        bag.push(v);
        bag.sort_unstable();
        bag_members.push(bag);
        adj[v].clear();
    }

    // Bag i belongs to elim_order[i]; its parent is the bag of the
    // earliest-eliminated vertex among its other members. Roots of separate
    // components are chained so the result is a single tree.
    let mut tree_edges = Vec::with_capacity(n.saturating_sub(1));
    let mut last_root: Option<usize> = None;
    for (i, bag) in bag_members.iter().enumerate() {
        let v = elim_order[i];
        match bag.iter().filter(|&&u| u != v).map(|&u| step_of[u]).min() {
            Some(parent) => tree_edges.push((i, parent)),
            None => {
                if let Some(r) = last_root {
                    tree_edges.push((r, i));
                }
                last_root = Some(i);
            }
        }
    }
    TreeDecomposition {
        bags: bag_members
            .into_iter()
            .map(|b| VertexSet::from_sorted(n, b))
            .collect(),
        tree_edges,
    }
}

fn fill_in(adj: &[BTreeSet<usize>], v: usize) -> usize {
    let nbrs: Vec<usize> = adj[v].iter().copied().collect();
    let mut missing = 0;
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if !adj[a].contains(&b) {
                missing += 1;
            }
        }
    }
    missing
}

/// Contracts tree edges whose endpoint bags are nested until none remain.
/// The result has at most `max(1, n)` bags when `n >= 1` and keeps width.
pub fn reduce_bag_count(td: &TreeDecomposition, g: &Graph) -> Result<TreeDecomposition, Violation> {
    validate_tree_decomposition(td, g)?;
    if g.vertex_count() == 0 {
        return Ok(TreeDecomposition {
            bags: Vec::new(),
            tree_edges: Vec::new(),
        });
    }
    let b = td.bags.len();
    let mut bags: Vec<Option<VertexSet>> = td.bags.iter().cloned().map(Some).collect();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); b];
    for &(x, y) in &td.tree_edges {
        adj[x].insert(y);
        adj[y].insert(x);
    }
    loop {
        let mut contracted = false;
        for x in 0..b {
            if bags[x].is_none() {
                continue;
            }
            let found = adj[x].iter().copied().find(|&y| {
                let (bx, by) = (bags[x].as_ref().unwrap(), bags[y].as_ref().unwrap());
                bx.is_subset_of(by) || by.is_subset_of(bx)
            });
            let Some(y) = found else { continue };
            // Keep the larger bag at index `keep`, merge `gone` into it.
            let (keep, gone) = if bags[x].as_ref().unwrap().len() >= bags[y].as_ref().unwrap().len()
            {
                (x, y)
            } else {
                (y, x)
            };
            let moved: Vec<usize> = adj[gone].iter().copied().filter(|&z| z != keep).collect();
            for z in moved {
                adj[z].remove(&gone);
                adj[z].insert(keep);
                adj[keep].insert(z);
            }
            adj[keep].remove(&gone);
            adj[gone].clear();
            bags[gone] = None;
            contracted = true;
        }
        if !contracted {
            break;
        }
    }
    let mut new_index = vec![usize::MAX; b];
    let mut out_bags = Vec::new();
    for (i, bag) in bags.iter().enumerate() {
        if let Some(bag) = bag {
            new_index[i] = out_bags.len();
            out_bags.push(bag.clone());
        }
    }
    let mut tree_edges = Vec::new();
    for (x, nbrs) in adj.iter().enumerate() {
        for &y in nbrs {
            if x < y {
                tree_edges.push((new_index[x], new_index[y]));
            }
        }
    }
    tree_edges.sort_unstable();
    Ok(TreeDecomposition {
        bags: out_bags,
        tree_edges,
    })
}
