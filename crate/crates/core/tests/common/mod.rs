//! Slow, simple oracles shared by the integration suites. None of them calls
//! into the library's algorithms; they only read `Graph` adjacency.

#![allow(dead_code)]

use orkernel::decomp::TreeDecomposition;
use orkernel::generators;
use orkernel::{CliqueInstance, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn bitset_rows(g: &Graph) -> (usize, Vec<Vec<u64>>) {
    let words = g.vertex_count().div_ceil(64).max(1);
    let rows = g
        .vertices()
        .map(|v| {
            let mut row = vec![0u64; words];
            for &w in g.neighbors(v) {
                row[w / 64] |= 1 << (w % 64);
            }
            row
        })
        .collect();
    (words, rows)
}

fn extend(rows: &[Vec<u64>], mut cand: Vec<u64>, size: usize, k: usize) -> bool {
    if size >= k {
        return true;
    }
    let count: usize = cand.iter().map(|w| w.count_ones() as usize).sum();
    if size + count < k {
        return false;
    }
    for i in 0..cand.len() {
        while cand[i] != 0 {
            let v = i * 64 + cand[i].trailing_zeros() as usize;
            cand[i] &= cand[i] - 1;
            let next: Vec<u64> = cand.iter().zip(&rows[v]).map(|(a, b)| a & b).collect();
            if extend(rows, next, size + 1, k) {
                return true;
            }
        }
    }
    false
}

/// Plain backtracking over candidate bitsets.
pub fn clique_oracle(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    let (words, rows) = bitset_rows(g);
    let mut all = vec![0u64; words];
    for v in g.vertices() {
        all[v / 64] |= 1 << (v % 64);
    }
    extend(&rows, all, 0, k)
}

pub fn instance_oracle(inst: &CliqueInstance) -> bool {
    clique_oracle(&inst.graph, inst.k)
}

pub fn clique_number(g: &Graph) -> usize {
    (1..=g.vertex_count())
        .take_while(|&k| clique_oracle(g, k))
        .last()
        .unwrap_or(0)
}

fn mask_neighbors(g: &Graph, v: usize) -> u32 {
    g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w)
}

/// Minimum over all vertex orderings of the largest number of neighbors
/// placed after a vertex, by dynamic programming over remaining sets.
pub fn degeneracy_by_orderings(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 16);
    let nb: Vec<u32> = (0..n).map(|v| mask_neighbors(g, v)).collect();
    let mut best = vec![usize::MAX; 1 << n];
    best[0] = 0;
    for s in 1u32..1 << n {
        let mut b = usize::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let without = s & !(1 << v);
            let later = (nb[v] & without).count_ones() as usize;
            b = b.min(later.max(best[without as usize]));
        }
        best[s as usize] = b;
    }
    best[(1usize << n) - 1]
}

/// Repeatedly removes a vertex of minimum degree; the largest degree seen
/// at removal is the degeneracy.
pub fn degeneracy_by_peeling(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut best = 0;
    for _ in 0..n {
        let (v, d) = (0..n)
            .filter(|&v| alive[v])
            .map(|v| (v, g.neighbors(v).iter().filter(|&&w| alive[w]).count()))
            .min_by_key(|&(_, d)| d)
            .unwrap();
        best = best.max(d);
        alive[v] = false;
    }
    best
}

fn induced_is_cycle(g: &Graph, mask: u32) -> bool {
    let members: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| mask >> v & 1 == 1)
        .collect();
    if members
        .iter()
        .any(|&v| (mask_neighbors(g, v) & mask).count_ones() != 2)
    {
        return false;
    }
    // 2-regular and connected means a single cycle
    let mut seen = 1u32 << members[0];
    let mut stack = vec![members[0]];
    while let Some(v) = stack.pop() {
        let mut next = mask_neighbors(g, v) & mask & !seen;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            seen |= 1 << w;
            stack.push(w);
        }
    }
    seen == mask
}

/// Whether some set of at least four vertices induces a cycle.
pub fn has_long_induced_cycle(g: &Graph) -> bool {
    let n = g.vertex_count();
    assert!(n <= 16);
    (0u32..1 << n).any(|mask| mask.count_ones() >= 4 && induced_is_cycle(g, mask))
}

/// Chordality by repeatedly deleting a simplicial vertex.
pub fn is_chordal_by_simplicial_deletion(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    for _ in 0..n {
        let simplicial = (0..n).filter(|&v| alive[v]).find(|&v| {
            let nb: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| alive[w])
                .collect();
            nb.iter()
                .enumerate()
                .all(|(i, &a)| nb[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        });
        match simplicial {
            Some(v) => alive[v] = false,
            None => return false,
        }
    }
    true
}

/// Two-colors by depth-first search; vertices flagged in `removed` are ignored.
pub fn bipartite_without(g: &Graph, removed: &[bool]) -> bool {
    let n = g.vertex_count();
    let mut color = vec![u8::MAX; n];
    for s in 0..n {
        if removed[s] || color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if removed[w] {
                    continue;
                }
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    stack.push(w);
                } else if color[w] == color[v] {
                    return false;
                }
            }
        }
    }
    true
}

pub fn max_degree_without(g: &Graph, removed: &[bool]) -> usize {
    g.vertices()
        .filter(|&v| !removed[v])
        .map(|v| g.neighbors(v).iter().filter(|&&w| !removed[w]).count())
        .max()
        .unwrap_or(0)
}

pub fn chordal_without(g: &Graph, removed: &[bool]) -> bool {
    let keep: Vec<usize> = g.vertices().filter(|&v| !removed[v]).collect();
    let index = |v: usize| keep.binary_search(&v).unwrap();
    let edges = g
        .edges()
        .filter(|&(u, v)| !removed[u] && !removed[v])
        .map(|(u, v)| (index(u), index(v)));
    is_chordal_by_simplicial_deletion(&Graph::from_edges(keep.len(), edges).unwrap())
}

fn flags(n: usize, mask: u32) -> Vec<bool> {
    (0..n).map(|v| mask >> v & 1 == 1).collect()
}

/// Smallest deletion set, by enumerating subsets.
pub fn min_deletion<F: Fn(&[bool]) -> bool>(n: usize, ok: F) -> usize {
    assert!(n <= 20);
    (0u32..1 << n)
        .filter(|&m| ok(&flags(n, m)))
        .map(|m| m.count_ones() as usize)
        .min()
        .expect("deleting everything always works")
}

pub fn min_oct(g: &Graph) -> usize {
    min_deletion(g.vertex_count(), |r| bipartite_without(g, r))
}

pub fn min_degree_deletion(g: &Graph, d: usize) -> usize {
    min_deletion(g.vertex_count(), |r| max_degree_without(g, r) <= d)
}

/// Vertex coverage, edge coverage, connectivity of each vertex's bags, and
/// a tree (or forest joined into a tree) on the bags.
pub fn tree_decomposition_is_valid(g: &Graph, td: &TreeDecomposition) -> bool {
    let n = g.vertex_count();
    let b = td.bags.len();
    if n == 0 {
        return true;
    }
    if b == 0 || td.tree_edges.len() != b - 1 {
        return false;
    }
    let mut adj = vec![Vec::new(); b];
    for &(x, y) in &td.tree_edges {
        if x >= b || y >= b || x == y {
            return false;
        }
        adj[x].push(y);
        adj[y].push(x);
    }
    let connected_over = |keep: &dyn Fn(usize) -> bool| -> bool {
        let nodes: Vec<usize> = (0..b).filter(|&i| keep(i)).collect();
        let Some(&s) = nodes.first() else {
            return false;
        };
        let mut seen = vec![false; b];
        seen[s] = true;
        let mut stack = vec![s];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] && keep(y) {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == nodes.len()
    };
    if !connected_over(&|_| true) {
        return false;
    }
    for v in 0..n {
        if !connected_over(&|i| td.bags[i].contains(v)) {
            return false;
        }
    }
    g.edges()
        .all(|(u, v)| td.bags.iter().any(|bag| bag.contains(u) && bag.contains(v)))
}

/// Random interval graph; always chordal.
pub fn interval_graph(n: usize, seed: u64) -> Graph {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    let iv: Vec<(u32, u32)> = (0..n)
        .map(|_| {
            let a = r.random_range(0..100u32);
            (a, a + r.random_range(1..25u32))
        })
        .collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if iv[i].0 < iv[j].1 && iv[j].0 < iv[i].1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub struct SuiteInstance {
    pub family: &'static str,
    pub inst: CliqueInstance,
}

pub const SUITE_FAMILIES: [&str; 8] = [
    "gnp-0.1",
    "gnp-0.3",
    "gnp-0.5",
    "gnp-0.8",
    "bipartite-plus-edges",
    "planted-clique",
    "cycle",
    "complete",
];

/// Seeded mix of the families, `count` instances, `n_G <= 30`, `k` in 1..=6.
pub fn or_suite(count: usize, seed: u64) -> Vec<SuiteInstance> {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let family = SUITE_FAMILIES[i % SUITE_FAMILIES.len()];
            let n = r.random_range(1..=30usize);
            let k = r.random_range(1..=6usize);
            let s: u64 = r.random();
            let graph = match family {
                "gnp-0.1" => generators::gnp(n, 0.1, s),
                "gnp-0.3" => generators::gnp(n, 0.3, s),
                "gnp-0.5" => generators::gnp(n, 0.5, s),
                "gnp-0.8" => generators::gnp(n, 0.8, s),
                "bipartite-plus-edges" => {
                    generators::bipartite_plus_edges(n, 0.4, r.random_range(0..5), s)
                }
                "planted-clique" => generators::planted_clique(n, 0.2, r.random_range(3..=6), s).0,
                "cycle" => Graph::cycle(n.max(3)),
                _ => Graph::complete(n),
            };
            SuiteInstance {
                family,
                inst: CliqueInstance::new(graph, k).unwrap(),
            }
        })
        .collect()
}

/// Seeded graphs on at most `max_n` vertices with varied densities.
pub fn small_graphs(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = r.random_range(0..=max_n);
            let p = [0.15, 0.3, 0.45, 0.6, 0.8][r.random_range(0..5)];
            generators::gnp(n, p, r.random())
        })
        .collect()
}
