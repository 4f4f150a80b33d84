//! Simple undirected graphs over dense vertex ids, plus the handful of
//! surgeries the kernels are built from: induced subgraphs, disjoint unions
//! and apex vertices.

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Simple undirected graph stored as sorted adjacency lists.
///
/// Vertices are `0..vertex_count()`. Adjacency lists are strictly increasing
/// and symmetric; there are no self-loops or parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u.max(v),
                    vertex_count: n,
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(GraphError::DuplicateEdge { u: a, v: b });
            }
        }
        Ok(Graph { adj, edge_count: m })
    }

    /// Builds a graph from adjacency lists that are already known to be
    /// sorted, symmetric and loop-free.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        let twice: usize = adj.iter().map(Vec::len).sum();
        debug_assert!(twice.is_multiple_of(2));
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(u, l)| l.windows(2).all(|w| w[0] < w[1]) && !l.contains(&u)));
        Graph {
            adj,
            edge_count: twice / 2,
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u).collect())
            .collect();
        Self::from_sorted_adjacency(adj)
    }

    /// Cycle on `n` vertices; `n < 3` yields a path.
    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 3 {
            edges.push((0, n - 1));
        }
        Self::from_edges(n, edges).expect("cycle edges are simple")
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are simple")
    }

    /// Star with one center (vertex 0) and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star edges are simple")
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Self::from_edges(10, edges).expect("petersen edges are simple")
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.adj.len()
    }

    /// Subgraph induced by `s`, relabeled `0..|s|` in increasing id order.
    /// The returned vector maps each new id to its original id.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        if s.host_vertex_count() != self.vertex_count() {
            if let Some(&bad) = s.iter().find(|&&v| v >= self.vertex_count()) {
                return Err(GraphError::VertexOutOfRange {
                    vertex: bad,
                    vertex_count: self.vertex_count(),
                });
            }
        }
        Ok(self.induced_by_sorted(s.members()))
    }

    /// Same as [`Graph::induced_subgraph`] for a sorted, duplicate-free slice
    /// of valid ids.
    pub(crate) fn induced_by_sorted(&self, members: &[usize]) -> (Graph, Vec<usize>) {
        const ABSENT: usize = usize::MAX;
        let mut new_id = vec![ABSENT; self.vertex_count()];
        for (i, &v) in members.iter().enumerate() {
            new_id[v] = i;
        }
        let adj = members
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (new_id[w] != ABSENT).then_some(new_id[w]))
                    .collect()
            })
            .collect();
        (Graph::from_sorted_adjacency(adj), members.to_vec())
    }

    /// Subgraph induced by the vertices not flagged in `removed`, with the
    /// original id of every kept vertex.
    pub fn without(&self, removed: &[bool]) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = self.vertices().filter(|&v| !removed[v]).collect();
        self.induced_by_sorted(&keep)
    }

    /// Disjoint union; vertex blocks are concatenated in input order.
    pub fn disjoint_union<'a, I>(graphs: I) -> Graph
    where
        I: IntoIterator<Item = &'a Graph>,
    {
        let mut adj = Vec::new();
        for g in graphs {
            let offset = adj.len();
            adj.extend(
                g.adj
                    .iter()
                    .map(|l| l.iter().map(|&w| w + offset).collect::<Vec<_>>()),
            );
        }
        Graph::from_sorted_adjacency(adj)
    }

    /// Appends `count` vertices adjacent to every other vertex.
    pub fn add_apexes(&self, count: usize) -> Graph {
        if count == 0 {
            return self.clone();
        }
        let n = self.vertex_count();
        let total = n + count;
        let mut adj: Vec<Vec<usize>> = self
            .adj
            .iter()
            .map(|l| {
                let mut l = l.clone();
                l.extend(n..total);
                l
            })
            .collect();
        for a in n..total {
            adj.push((0..total).filter(|&w| w != a).collect());
        }
        Graph::from_sorted_adjacency(adj)
    }
}

/// Number of bits used to account for a graph:
/// `n_G + m_G * ceil(log2(max(n_G, 2)))`.
pub fn encoding_size(g: &Graph) -> u64 {
    let n = g.vertex_count() as u64;
    let m = g.edge_count() as u64;
    n + m * ceil_log2(n.max(2))
}

/// `ceil(log2(x))` for `x >= 1`.
pub fn ceil_log2(x: u64) -> u64 {
    debug_assert!(x >= 1);
    (u64::BITS - (x - 1).leading_zeros()) as u64
}

/// A graph together with the clique size being searched for.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CliqueInstance {
    pub graph: Graph,
    pub k: usize,
}

impl CliqueInstance {
    pub fn new(graph: Graph, k: usize) -> Result<Self, GraphError> {
        if k == 0 {
            return Err(GraphError::InvalidCliqueSize);
        }
        Ok(CliqueInstance { graph, k })
    }

    pub fn encoding_size(&self) -> u64 {
        encoding_size(&self.graph)
    }
}

/// Sorted set of vertex ids of some host graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct VertexSet {
    members: Vec<usize>,
    host_vertex_count: usize,
}

impl VertexSet {
    pub fn new<I>(host_vertex_count: usize, ids: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut members: Vec<usize> = ids.into_iter().collect();
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateVertex { vertex: w[0] });
        }
        if let Some(&last) = members.last() {
            if last >= host_vertex_count {
                return Err(GraphError::VertexOutOfRange {
                    vertex: last,
                    vertex_count: host_vertex_count,
                });
            }
        }
        Ok(VertexSet {
            members,
            host_vertex_count,
        })
    }

    pub fn empty(host_vertex_count: usize) -> Self {
        VertexSet {
            members: Vec::new(),
            host_vertex_count,
        }
    }

    pub(crate) fn from_sorted(host_vertex_count: usize, members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.last().is_none_or(|&v| v < host_vertex_count));
        VertexSet {
            members,
            host_vertex_count,
        }
    }

    pub(crate) fn from_flags(flags: &[bool]) -> Self {
        let members = flags
            .iter()
            .enumerate()
            .filter_map(|(v, &f)| f.then_some(v))
            .collect();
        VertexSet {
            members,
            host_vertex_count: flags.len(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.members.iter()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn host_vertex_count(&self) -> usize {
        self.host_vertex_count
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.members.iter().all(|&v| other.contains(v))
    }

    /// Membership flags indexed by host vertex id.
    pub fn to_flags(&self) -> Vec<bool> {
        let mut flags = vec![false; self.host_vertex_count];
        for &v in &self.members {
            flags[v] = true;
        }
        flags
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut members: Vec<usize> = self.members.iter().chain(&other.members).copied().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet {
            members,
            host_vertex_count: self.host_vertex_count.max(other.host_vertex_count),
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}
