//! OR-kernels for Clique.
//!
//! Every generator maps `(G, k)` to a [`QuerySet`]: either an immediate
//! answer or a list of small instances, each an induced subgraph of `G`
//! searching for the same `k`, such that `G` has a `k`-clique iff one of
//! the queries does. They differ in which structure bounds the query size:
//!
//! | kernel | structure | query | count |
//! |---|---|---|---|
//! | degeneracy | peeling order | `v` plus later neighbors | `<= n` |
//! | oct | odd cycle transversal `X` | `X` plus an edge (or isolated vertex) of `G-X` | `<= m+n` |
//! | dbd | deletion set `X` to max degree `d` | `X` plus `N_H[v]`, `H = G-X` | `<= max(n,1)` |
//! | chordal | chordal deletion set `X` | `X` plus `N+[v]` in a PEO of `G-X` | `<= n` |
//! | loc | blocks + tree decompositions | one bag of a non-bipartite block | `<= n+2m` |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::decomp::{
    block_decomposition, chordality_check, degeneracy_ordering, heuristic_tree_decomposition,
    is_bipartite, later_closed_neighborhood, reduce_bag_count, Chordality,
};
use crate::error::PipelineError;
use crate::graph::{ceil_log2, encoding_size, CliqueInstance, Graph};
use crate::modulators::{
    bounded_degree_modulator, chordal_modulator_greedy, oct_exact, oct_heuristic,
    BoundedDegreeOutcome, Modulator, OctOutcome,
};
use crate::solver::{has_clique, Answer, SolveBudget};

/// Where a query came from, in ids of the input graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Provenance {
    Vertex {
        v: usize,
    },
    Edge {
        u: usize,
        v: usize,
    },
    IsolatedVertex {
        v: usize,
    },
    /// The modulator alone, used when nothing is left outside it.
    Modulator,
    Bag {
        block: usize,
        bag: usize,
    },
    /// Composition of queries `first..first + len` of the unbatched set.
    Batch {
        first: usize,
        len: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Query {
    pub instance: CliqueInstance,
    /// Original id of every query vertex, when the query is an induced
    /// subgraph of the input.
    pub origin: Option<Vec<usize>>,
    pub provenance: Provenance,
}

impl Query {
    fn induced(g: &Graph, members: &[usize], k: usize, provenance: Provenance) -> Query {
        let (graph, map) = g.induced_by_sorted(members);
        Query {
            instance: CliqueInstance { graph, k },
            origin: Some(map),
            provenance,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.instance.graph.vertex_count()
    }
}

/// Queries with OR semantics: the input is a Yes-instance iff
/// `immediate_answer` is Yes or some query is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuerySet {
    pub kernel: Kernel,
    pub parameter_name: &'static str,
    /// Achieved parameter (computed degeneracy, `|X|`, largest bag).
    pub parameter_value: usize,
    pub immediate_answer: Option<Answer>,
    pub queries: Vec<Query>,
    /// Promised bound on the vertices of every query.
    pub size_bound: Option<usize>,
}

impl QuerySet {
    fn immediate(
        kernel: Kernel,
        parameter_name: &'static str,
        value: usize,
        answer: Answer,
    ) -> Self {
        QuerySet {
            kernel,
            parameter_name,
            parameter_value: value,
            immediate_answer: Some(answer),
            queries: Vec::new(),
            size_bound: None,
        }
    }

    /// Same kernel and parameter, no queries.
    pub fn clone_header(&self) -> QuerySet {
        QuerySet {
            kernel: self.kernel,
            parameter_name: self.parameter_name,
            parameter_value: self.parameter_value,
            immediate_answer: self.immediate_answer,
            queries: Vec::new(),
            size_bound: self.size_bound,
        }
    }

    pub fn len(&self) -> usize {
        self.queries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.queries.is_empty()
    }

    pub fn max_query_vertices(&self) -> usize {
        self.queries
            .iter()
            .map(Query::vertex_count)
            .max()
            .unwrap_or(0)
    }

    pub fn max_query_encoding_size(&self) -> u64 {
        self.queries
            .iter()
            .map(|q| encoding_size(&q.instance.graph))
            .max()
            .unwrap_or(0)
    }

    /// Combines the immediate answer and the answers `resolve` gives for
    /// the queries.
    pub fn resolve_with<F>(&self, mut resolve: F) -> Answer
    where
        F: FnMut(&CliqueInstance) -> Answer,
    {
        if let Some(a) = self.immediate_answer {
            return a;
        }
        Answer::from(self.queries.iter().any(|q| resolve(&q.instance).is_yes()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kernel {
    Degeneracy,
    Oct,
    BoundedDegree { d: usize },
    Chordal,
    LongestOddCycle,
}

impl Kernel {
    pub const NAMES: [&'static str; 5] = ["degeneracy", "oct", "dbd", "chordal", "loc"];

    pub fn name(&self) -> &'static str {
        match self {
            Kernel::Degeneracy => "degeneracy",
            Kernel::Oct => "oct",
            Kernel::BoundedDegree { .. } => "dbd",
            Kernel::Chordal => "chordal",
            Kernel::LongestOddCycle => "loc",
        }
    }

    /// Parses a kernel name; `d` is used by `dbd` only.
    pub fn parse(name: &str, d: usize) -> Result<Kernel, PipelineError> {
        match name {
            "degeneracy" => Ok(Kernel::Degeneracy),
            "oct" => Ok(Kernel::Oct),
            "dbd" => Ok(Kernel::BoundedDegree { d }),
            "chordal" => Ok(Kernel::Chordal),
            "loc" => Ok(Kernel::LongestOddCycle),
            other => Err(PipelineError::UnknownKernel(other.to_string())),
        }
    }

    pub fn all(d: usize) -> [Kernel; 5] {
        [
            Kernel::Degeneracy,
            Kernel::Oct,
            Kernel::BoundedDegree { d },
            Kernel::Chordal,
            Kernel::LongestOddCycle,
        ]
    }

    pub fn apply(&self, inst: &CliqueInstance) -> QuerySet {
        match *self {
            Kernel::Degeneracy => kernel_degeneracy(inst),
            Kernel::Oct => kernel_oct(inst),
            Kernel::BoundedDegree { d } => kernel_bounded_degree(inst, d),
            Kernel::Chordal => kernel_chordal(inst),
            Kernel::LongestOddCycle => kernel_longest_odd_cycle(inst),
        }
    }

    /// Largest number of queries the kernel may emit on `g`.
    pub fn query_count_bound(&self, g: &Graph) -> usize {
        let (n, m) = (g.vertex_count(), g.edge_count());
        match self {
            Kernel::Degeneracy | Kernel::Chordal => n,
            Kernel::Oct => m + n,
            Kernel::BoundedDegree { .. } => n.max(1),
            Kernel::LongestOddCycle => n + 2 * m,
        }
    }
}

impl fmt::Display for Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kernel {
    type Err = PipelineError;

    /// `dbd` parses with `d = 1`; use [`Kernel::parse`] to choose `d`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Kernel::parse(s, 1)
    }
}

fn with_extra(x: &Modulator, extra: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut members: Vec<usize> = x.vertices.iter().copied().chain(extra).collect();
    members.sort_unstable();
    members.dedup();
    members
}

/// One query per vertex: the vertex with its later neighbors in the
/// degeneracy order. Queries are emitted in that order.
pub fn kernel_degeneracy(inst: &CliqueInstance) -> QuerySet {
    let g = &inst.graph;
    let ord = degeneracy_ordering(g);
    let queries = ord
        .order
        .iter()
        .map(|&v| {
            let nb = later_closed_neighborhood(g, &ord, v);
            Query::induced(g, nb.members(), inst.k, Provenance::Vertex { v })
        })
        .collect();
    QuerySet {
        kernel: Kernel::Degeneracy,
        parameter_name: "degeneracy",
        parameter_value: ord.degeneracy,
        immediate_answer: None,
        queries,
        size_bound: Some(ord.degeneracy + 1),
    }
}

const OCT_PARAMETER: &str = "odd cycle transversal size";

/// Tries an exact transversal of size at most `ceil(log2 n)` first (`n` the
/// encoding size) and solves directly when one exists. Otherwise the greedy
/// transversal drives [`kernel_oct_with_modulator`].
pub fn kernel_oct(inst: &CliqueInstance) -> QuerySet {
    let g = &inst.graph;
    let budget = ceil_log2(encoding_size(g).max(1)) as usize;
    match oct_exact(g, budget) {
        OctOutcome::Found(x) => {
            let answer = has_clique(inst, SolveBudget::unlimited())
                .answer()
                .expect("unlimited budget");
            QuerySet::immediate(Kernel::Oct, OCT_PARAMETER, x.len(), answer)
        }
        OctOutcome::NoneWithin | OctOutcome::Abort => {
            kernel_oct_with_modulator(inst, &oct_heuristic(g))
        }
    }
}

/// Queries `G[e + X]` for every edge `e` of `G - X`, and `G[v + X]` for every
/// vertex `v` isolated in `G - X`. `x` must make `G - X` bipartite.
pub fn kernel_oct_with_modulator(inst: &CliqueInstance, x: &Modulator) -> QuerySet {
    let g = &inst.graph;
    let (rest, map) = g.without(&x.vertices.to_flags());
    let mut queries: Vec<Query> = rest
        .edges()
        .map(|(a, b)| {
            let (u, v) = (map[a], map[b]);
            Query::induced(g, &with_extra(x, [u, v]), inst.k, Provenance::Edge { u, v })
        })
        .collect();
    queries.extend(rest.vertices().filter(|&a| rest.degree(a) == 0).map(|a| {
        let v = map[a];
        Query::induced(
            g,
            &with_extra(x, [v]),
            inst.k,
            Provenance::IsolatedVertex { v },
        )
    }));
    QuerySet {
        kernel: Kernel::Oct,
        parameter_name: OCT_PARAMETER,
        parameter_value: x.len(),
        immediate_answer: None,
        queries,
        size_bound: Some(x.len() + 2),
    }
}

/// Finds the smallest guess `p` for which the approximate deletion set to
/// maximum degree `d` succeeds, then queries `G[X + N_H[v]]` for every
/// vertex `v` of `H = G - X` (or `G[X]` alone when `H` is empty).
pub fn kernel_bounded_degree(inst: &CliqueInstance, d: usize) -> QuerySet {
    let g = &inst.graph;
    let x = (0..=g.vertex_count())
        .find_map(|p| match bounded_degree_modulator(g, d, p) {
            BoundedDegreeOutcome::Found(x) => Some(x),
            BoundedDegreeOutcome::No => None,
        })
        .expect("deleting every vertex always succeeds");
    let (rest, map) = g.without(&x.vertices.to_flags());
    let mut queries: Vec<Query> = rest
        .vertices()
        .map(|a| {
            let closed = rest.neighbors(a).iter().chain([&a]).map(|&b| map[b]);
            Query::induced(
                g,
                &with_extra(&x, closed),
                inst.k,
                Provenance::Vertex { v: map[a] },
            )
        })
        .collect();
    if queries.is_empty() {
        queries.push(Query::induced(
            g,
            x.vertices.members(),
            inst.k,
            Provenance::Modulator,
        ));
    }
    QuerySet {
        kernel: Kernel::BoundedDegree { d },
        parameter_name: "distance to bounded degree",
        parameter_value: x.len(),
        immediate_answer: None,
        queries,
        size_bound: Some(x.len() + d + 1),
    }
}

/// Greedy chordal deletion set `X`, then for every `v` in a perfect
/// elimination ordering of `H = G - X` the query `G[X + N+[v]]`. A later
/// neighborhood of size `>= k` is already a clique, so it answers Yes.
pub fn kernel_chordal(inst: &CliqueInstance) -> QuerySet {
    const NAME: &str = "chordal deletion set size";
    let g = &inst.graph;
    let x = chordal_modulator_greedy(g);
    let (rest, map) = g.without(&x.vertices.to_flags());
    let Chordality::Chordal(peo) = chordality_check(&rest) else {
        unreachable!("the modulator leaves a chordal graph");
    };
    let mut queries = Vec::with_capacity(rest.vertex_count());
    for &a in &peo.order {
        let later = peo.later_closed_neighborhood(&rest, a);
        if later.len() >= inst.k {
            return QuerySet::immediate(Kernel::Chordal, NAME, x.len(), Answer::Yes);
        }
        let members = with_extra(&x, later.iter().map(|&b| map[b]));
        queries.push(Query::induced(
            g,
            &members,
            inst.k,
            Provenance::Vertex { v: map[a] },
        ));
    }
    if queries.is_empty() {
        queries.push(Query::induced(
            g,
            x.vertices.members(),
            inst.k,
            Provenance::Modulator,
        ));
    }
    QuerySet {
        kernel: Kernel::Chordal,
        parameter_name: NAME,
        parameter_value: x.len(),
        immediate_answer: None,
        queries,
        size_bound: Some(x.len() + inst.k),
    }
}

/// For `k >= 3`: one query per bag of a tree decomposition of every
/// non-bipartite block. Bipartite blocks hold no triangle and are skipped.
pub fn kernel_longest_odd_cycle(inst: &CliqueInstance) -> QuerySet {
    const NAME: &str = "largest bag size";
    let g = &inst.graph;
    match inst.k {
        0 | 1 => {
            return QuerySet::immediate(
                Kernel::LongestOddCycle,
                NAME,
                0,
                Answer::from(g.vertex_count() >= 1),
            )
        }
        2 => {
            return QuerySet::immediate(
                Kernel::LongestOddCycle,
                NAME,
                0,
                Answer::from(g.edge_count() >= 1),
            )
        }
        _ => {}
    }
    let blocks = block_decomposition(g);
    let mut queries = Vec::new();
    for (bi, block) in blocks.blocks.iter().enumerate() {
        if block.len() < 3 {
            continue;
        }
        let (sub, map) = g.induced_by_sorted(block.members());
        if is_bipartite(&sub).is_bipartite() {
            continue;
        }
        let td = reduce_bag_count(&heuristic_tree_decomposition(&sub), &sub)
            .expect("heuristic decompositions are valid");
        for (j, bag) in td.bags.iter().enumerate() {
            let members: Vec<usize> = bag.iter().map(|&b| map[b]).collect();
            queries.push(Query::induced(
                g,
                &members,
                inst.k,
                Provenance::Bag { block: bi, bag: j },
            ));
        }
    }
    if queries.is_empty() {
        return QuerySet::immediate(Kernel::LongestOddCycle, NAME, 0, Answer::No);
    }
    let largest = queries.iter().map(Query::vertex_count).max().unwrap_or(0);
    QuerySet {
        kernel: Kernel::LongestOddCycle,
        parameter_name: NAME,
        parameter_value: largest,
        immediate_answer: None,
        queries,
        size_bound: Some(largest),
    }
}
