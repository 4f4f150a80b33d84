//! Exact clique decision.
//!
//! [`has_clique`] walks the degeneracy order and, for every vertex, runs a
//! bitset branch-and-bound for a `(k-1)`-clique among its later neighbors.
//! Each subproblem therefore has at most `degeneracy` candidates.
//! [`brute_force_has_clique`] is an independent enumeration used as a
//! test oracle; it shares nothing with the search beyond [`Graph`].

use std::num::NonZeroU64;

use serde::{Deserialize, Serialize};

use crate::decomp::degeneracy_ordering;
use crate::graph::{CliqueInstance, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
}

impl Answer {
    pub fn is_yes(self) -> bool {
        self == Answer::Yes
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Answer::Yes => "yes",
            Answer::No => "no",
        }
    }
}

impl From<bool> for Answer {
    fn from(b: bool) -> Self {
        if b {
            Answer::Yes
        } else {
            Answer::No
        }
    }
}

impl std::fmt::Display for Answer {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolveOutcome {
    Yes,
    No,
    BudgetExceeded,
}

impl SolveOutcome {
    pub fn answer(self) -> Option<Answer> {
        match self {
            SolveOutcome::Yes => Some(Answer::Yes),
            SolveOutcome::No => Some(Answer::No),
            SolveOutcome::BudgetExceeded => None,
        }
    }
}

impl From<Answer> for SolveOutcome {
    fn from(a: Answer) -> Self {
        match a {
            Answer::Yes => SolveOutcome::Yes,
            Answer::No => SolveOutcome::No,
        }
    }
}

/// Cap on the number of search-tree nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SolveBudget {
    pub node_limit: Option<NonZeroU64>,
}

impl SolveBudget {
    pub fn unlimited() -> Self {
        SolveBudget { node_limit: None }
    }

    pub fn nodes(limit: NonZeroU64) -> Self {
        SolveBudget {
            node_limit: Some(limit),
        }
    }
}

/// Decides whether `inst.graph` has `inst.k` pairwise adjacent vertices.
pub fn has_clique(inst: &CliqueInstance, budget: SolveBudget) -> SolveOutcome {
    let g = &inst.graph;
    let k = inst.k;
    match k {
        0 | 1 => return Answer::from(g.vertex_count() >= 1).into(),
        2 => return Answer::from(g.edge_count() >= 1).into(),
        _ => {}
    }
    if k > g.vertex_count() || g.edge_count() < k * (k - 1) / 2 {
        return SolveOutcome::No;
    }
    let ord = degeneracy_ordering(g);
    if ord.degeneracy + 1 < k {
        return SolveOutcome::No;
    }

    let mut search = Search {
        nodes: 0,
        limit: budget.node_limit.map_or(u64::MAX, NonZeroU64::get),
    };
    for &v in &ord.order {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| ord.position[w] > ord.position[v])
            .collect();
        if later.len() + 1 < k {
            continue;
        }
        let local = LocalGraph::new(g, &later);
        match search.expand(&local, BitSet::full(later.len()), k - 1) {
            Ok(true) => return SolveOutcome::Yes,
            Ok(false) => {}
            Err(Exceeded) => return SolveOutcome::BudgetExceeded,
        }
    }
    SolveOutcome::No
}

struct Exceeded;

struct Search {
    nodes: u64,
    limit: u64,
}

impl Search {
    fn expand(
        &mut self,
        local: &LocalGraph,
        mut cands: BitSet,
        need: usize,
    ) -> Result<bool, Exceeded> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Exceeded);
        }
        if need == 0 {
            return Ok(true);
        }
        if cands.count() < need || greedy_color_bound(local, &cands) < need {
            return Ok(false);
        }
        while let Some(u) = cands.first() {
            if cands.count() < need {
                break;
            }
            let next = cands.intersect(&local.adj[u]);
            if self.expand(local, next, need - 1)? {
                return Ok(true);
            }
            cands.remove(u);
        }
        Ok(false)
    }
}

/// Number of colors a greedy coloring of `cands` uses; an upper bound on the
/// largest clique inside `cands`.
fn greedy_color_bound(local: &LocalGraph, cands: &BitSet) -> usize {
    let mut uncolored = cands.clone();
    let mut colors = 0;
    while !uncolored.is_empty() {
        colors += 1;
        let mut avail = uncolored.clone();
        while let Some(u) = avail.first() {
            uncolored.remove(u);
            avail.remove(u);
            avail.subtract(&local.adj[u]);
        }
    }
    colors
}

/// Subgraph on a candidate list, with bitset adjacency over local indices.
struct LocalGraph {
    adj: Vec<BitSet>,
}

impl LocalGraph {
    fn new(g: &Graph, vertices: &[usize]) -> Self {
        let s = vertices.len();
        let adj = vertices
            .iter()
            .map(|&u| {
                let mut row = BitSet::new(s);
                for (j, &w) in vertices.iter().enumerate() {
                    if g.has_edge(u, w) {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        LocalGraph { adj }
    }
}

#[derive(Clone, Debug)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
        }
    }

    fn full(len: usize) -> Self {
        let mut s = Self::new(len);
        for (i, w) in s.words.iter_mut().enumerate() {
            let remaining = len - i * 64;
            *w = if remaining >= 64 {
                u64::MAX
            } else {
                (1u64 << remaining) - 1
            };
        }
        s
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn intersect(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    fn subtract(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }
}

/// Exhaustive clique check: for every vertex `v`, tries every way of picking
/// `k - 1` neighbors with larger ids, keeping only pairwise adjacent picks.
pub fn brute_force_has_clique(inst: &CliqueInstance) -> Answer {
    let g = &inst.graph;
    let k = inst.k.max(1);
    let mut chosen = Vec::with_capacity(k);
    for v in g.vertices() {
        let higher: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| w > v).collect();
        chosen.clear();
        chosen.push(v);
        if extend(g, &higher, 0, k, &mut chosen) {
            return Answer::Yes;
        }
    }
    Answer::No
}

fn extend(g: &Graph, pool: &[usize], from: usize, k: usize, chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == k {
        return true;
    }
    for i in from..pool.len() {
        if pool.len() - i < k - chosen.len() {
            return false;
        }
        let w = pool[i];
        if chosen.iter().all(|&c| g.has_edge(c, w)) {
            chosen.push(w);
            if extend(g, pool, i + 1, k, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}
