//! Seeded random and structured graph families for corpora and tests.
//! Every generator is deterministic in its arguments.

use std::collections::BTreeSet;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::PipelineError;
use crate::graph::Graph;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn from_set(n: usize, edges: BTreeSet<(usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("generated edges are simple")
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated edges are simple")
}

/// Random bipartite graph between `0..n/2` and `n/2..n` with cross-edge
/// probability `p`, plus `extra` random edges inside the sides.
pub fn bipartite_plus_edges(n: usize, p: f64, extra: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    let half = n / 2;
    let mut edges = BTreeSet::new();
    for u in 0..half {
        for v in half..n {
            if r.random::<f64>() < p {
                edges.insert((u, v));
            }
        }
    }
    let inside: usize =
        half * half.saturating_sub(1) / 2 + (n - half) * (n - half).saturating_sub(1) / 2;
    let target = extra.min(inside);
    let mut added = 0;
    while added < target {
        let u = r.random_range(0..n);
        let v = r.random_range(0..n);
        if u == v || (u < half) != (v < half) {
            continue;
        }
        if edges.insert((u.min(v), u.max(v))) {
            added += 1;
        }
    }
    from_set(n, edges)
}

/// Random graph of maximum degree at most `d`, built from `4nd` random edge
/// attempts.
pub fn bounded_degree(n: usize, d: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    let mut deg = vec![0usize; n];
    let mut edges = BTreeSet::new();
    if n >= 2 {
        for _ in 0..4 * n * d {
            let u = r.random_range(0..n);
            let v = r.random_range(0..n);
            if u == v || deg[u] >= d || deg[v] >= d {
                continue;
            }
            if edges.insert((u.min(v), u.max(v))) {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
    }
    from_set(n, edges)
}

/// `G(n, p)` with a clique planted on `k` random vertices, which are returned
/// in increasing order.
pub fn planted_clique(n: usize, p: f64, k: usize, seed: u64) -> (Graph, Vec<usize>) {
    let base = gnp(n, p, seed);
    let mut r = rng(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(&mut r);
    let mut planted: Vec<usize> = ids.into_iter().take(k.min(n)).collect();
    planted.sort_unstable();
    let mut edges: BTreeSet<(usize, usize)> = base.edges().collect();
    for (i, &a) in planted.iter().enumerate() {
        for &b in &planted[i + 1..] {
            edges.insert((a, b));
        }
    }
    (from_set(n, edges), planted)
}

/// Named generator families accepted by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Gnp,
    BipartitePlusEdges,
    BoundedDegree,
    PlantedClique,
    Cycle,
    Complete,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Gnp,
        Family::BipartitePlusEdges,
        Family::BoundedDegree,
        Family::PlantedClique,
        Family::Cycle,
        Family::Complete,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Gnp => "gnp",
            Family::BipartitePlusEdges => "bipartite-plus-edges",
            Family::BoundedDegree => "bounded-degree",
            Family::PlantedClique => "planted-clique",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
        }
    }
}

impl FromStr for Family {
    type Err = PipelineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| PipelineError::UnknownFamily(s.to_string()))
    }
}

/// Knobs for [`generate`]; each family reads only the ones it needs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FamilyParams {
    /// Edge probability (gnp, planted-clique, bipartite cross edges).
    pub p: f64,
    /// Degree cap (bounded-degree).
    pub d: usize,
    /// Planted clique size.
    pub k: usize,
    /// Extra same-side edges (bipartite-plus-edges).
    pub extra: usize,
}

impl Default for FamilyParams {
    fn default() -> Self {
        FamilyParams {
            p: 0.3,
            d: 3,
            k: 4,
            extra: 2,
        }
    }
}

/// Output of [`generate`]: the graph and, for planted cliques, the planted
/// vertex set.
#[derive(Debug, Clone, PartialEq)]
pub struct Generated {
    pub graph: Graph,
    pub planted: Option<Vec<usize>>,
}

pub fn generate(family: Family, n: usize, seed: u64, params: &FamilyParams) -> Generated {
    let graph = match family {
        Family::Gnp => gnp(n, params.p, seed),
        Family::BipartitePlusEdges => bipartite_plus_edges(n, params.p, params.extra, seed),
        Family::BoundedDegree => bounded_degree(n, params.d, seed),
        Family::PlantedClique => {
            let (g, planted) = planted_clique(n, params.p, params.k, seed);
            return Generated {
                graph: g,
                planted: Some(planted),
            };
        }
        Family::Cycle => Graph::cycle(n),
        Family::Complete => Graph::complete(n),
    };
    Generated {
        graph,
        planted: None,
    }
}
