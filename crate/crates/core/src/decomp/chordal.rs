use std::collections::VecDeque;

use crate::graph::Graph;

/// Vertex order in which every vertex's later neighbors form a clique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectEliminationOrdering {
    pub order: Vec<usize>,
    pub position: Vec<usize>,
}

impl PerfectEliminationOrdering {
    fn from_order(order: Vec<usize>) -> Self {
        let mut position = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        PerfectEliminationOrdering { order, position }
    }

    /// `v` plus its neighbors that come after it.
    pub fn later_closed_neighborhood(&self, g: &Graph, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| self.position[w] > self.position[v])
            .collect();
        out.push(v);
        out.sort_unstable();
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chordality {
    Chordal(PerfectEliminationOrdering),
    /// Chordless cycle of length at least 4, in cyclic order.
    NotChordal(Vec<usize>),
}

/// Lexicographic breadth-first search by partition refinement. Ties inside
/// a class are resolved by smallest id.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut classes: VecDeque<Vec<usize>> = VecDeque::new();
    if n > 0 {
        classes.push_back(g.vertices().collect());
    }
    let mut visited = vec![false; n];
    let mut mark = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while let Some(front) = classes.front_mut() {
        let v = front.remove(0);
        if front.is_empty() {
            classes.pop_front();
        }
        visited[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                mark[w] = true;
            }
        }
        let mut refined = VecDeque::with_capacity(classes.len() * 2);
        for class in classes.drain(..) {
            let (hit, miss): (Vec<usize>, Vec<usize>) = class.into_iter().partition(|&u| mark[u]);
            if !hit.is_empty() {
                refined.push_back(hit);
            }
            if !miss.is_empty() {
                refined.push_back(miss);
            }
        }
        classes = refined;
        for &w in g.neighbors(v) {
            mark[w] = false;
        }
    }
    order
}

/// Lex-BFS, then the parent test on the reversed visit order. A failed test
/// is turned into an induced cycle of length at least 4.
pub fn chordality_check(g: &Graph) -> Chordality {
    let mut order = lex_bfs(g);
    order.reverse();
    let peo = PerfectEliminationOrdering::from_order(order);
    match first_violation(g, &peo) {
        None => Chordality::Chordal(peo),
        Some(v) => {
            let cycle = std::iter::once(v)
                .chain(g.vertices())
                .find_map(|c| induced_cycle_through(g, c))
                .expect("a graph without a perfect elimination ordering has a chordless cycle");
            Chordality::NotChordal(cycle)
        }
    }
}

/// Returns a vertex whose later neighbors fail to sit inside the
/// neighborhood of the earliest of them.
fn first_violation(g: &Graph, peo: &PerfectEliminationOrdering) -> Option<usize> {
    for &v in &peo.order {
        let pos = peo.position[v];
        let later = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| peo.position[w] > pos);
        let Some(parent) = later.clone().min_by_key(|&w| peo.position[w]) else {
            continue;
        };
        if later
            .filter(|&w| w != parent)
            .any(|w| !g.has_edge(parent, w))
        {
            return Some(v);
        }
    }
    None
}

/// Looks for an induced cycle of length at least 4 through `v`: two
/// nonadjacent neighbors `a`, `b` joined by a shortest path whose interior
/// avoids the closed neighborhood of `v`.
fn induced_cycle_through(g: &Graph, v: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for &w in g.neighbors(v) {
        blocked[w] = true;
    }
    // Components of G - N[v].
    let mut comp = vec![usize::MAX; n];
    let mut comp_count = 0;
    for s in g.vertices() {
        if blocked[s] || comp[s] != usize::MAX {
            continue;
        }
        comp[s] = comp_count;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !blocked[w] && comp[w] == usize::MAX {
                    comp[w] = comp_count;
                    stack.push(w);
                }
            }
        }
        comp_count += 1;
    }
    // Neighbors of v attached to each component, in id order.
    let mut attached: Vec<Vec<usize>> = vec![Vec::new(); comp_count];
    for &a in g.neighbors(v) {
        let mut cs: Vec<usize> = g
            .neighbors(a)
            .iter()
            .filter(|&&w| !blocked[w])
            .map(|&w| comp[w])
            .collect();
        cs.sort_unstable();
        cs.dedup();
        for c in cs {
            attached[c].push(a);
        }
    }
    for (c, touching) in attached.iter().enumerate() {
        for (i, &a) in touching.iter().enumerate() {
            if let Some(&b) = touching[i + 1..].iter().find(|&&b| !g.has_edge(a, b)) {
                let path = shortest_path_through(g, a, b, |w| comp[w] == c && !blocked[w]);
                let mut cycle = vec![v];
                cycle.extend(path);
                return Some(cycle);
            }
        }
    }
    None
}

/// Shortest `a`-`b` path whose interior vertices satisfy `allowed`.
fn shortest_path_through(
    g: &Graph,
    a: usize,
    b: usize,
    allowed: impl Fn(usize) -> bool,
) -> Vec<usize> {
    let mut prev = vec![usize::MAX; g.vertex_count()];
    prev[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if prev[w] != usize::MAX {
                continue;
            }
            if w == b && u != a {
                prev[w] = u;
                let mut path = vec![b];
                let mut cur = b;
                while cur != a {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return path;
            }
            if allowed(w) {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    unreachable!("caller guarantees a and b share a component")
}
