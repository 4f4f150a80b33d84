//! Odd cycle transversal.
//!
//! The exact routine is iterative compression: vertices are added in id
//! order while a minimum transversal `X` of the graph seen so far is kept.
//! When a new vertex `v` creates an odd cycle, `Z = X + v` is compressed by
//! guessing, for every `z` in `Z`, whether it is deleted or which side it
//! lands on, and then cutting the remaining conflicts with a unit-capacity
//! vertex cut. Since `X` was minimum, so is the result of every step.

use std::collections::VecDeque;

use crate::decomp::{is_bipartite, Bipartiteness};
use crate::graph::{Graph, VertexSet};

use super::{Method, Modulator, TargetClass};

/// Work units (compression leaves plus augmenting paths) before
/// [`oct_exact`] gives up with [`OctOutcome::Abort`].
pub const DEFAULT_OCT_WORK_LIMIT: u64 = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OctOutcome {
    /// A minimum odd cycle transversal, of size at most the budget.
    Found(Modulator),
    /// The minimum exceeds the budget.
    NoneWithin,
    Abort,
}

pub fn oct_exact(g: &Graph, budget: usize) -> OctOutcome {
    oct_exact_with_limit(g, budget, DEFAULT_OCT_WORK_LIMIT)
}

pub fn oct_exact_with_limit(g: &Graph, budget: usize, work_limit: u64) -> OctOutcome {
    if odd_cycle_packing(g) > budget {
        return OctOutcome::NoneWithin;
    }
    let n = g.vertex_count();
    let mut work = Work {
        used: 0,
        limit: work_limit,
    };
    let mut in_x = vec![false; n];
    let mut active = Vec::with_capacity(n);
    for v in g.vertices() {
        active.push(v);
        let (h, _) = g.induced_by_sorted(&active);
        let local_x: Vec<bool> = active.iter().map(|&u| in_x[u]).collect();
        if is_bipartite(&h.without(&local_x).0).is_bipartite() {
            continue;
        }
        let z: Vec<usize> = (0..active.len())
            .filter(|&i| local_x[i] || active[i] == v)
            .collect();
        match compress(&h, &z, &mut work) {
            Ok(Some(smaller)) => {
                for &u in &active {
                    in_x[u] = false;
                }
                for i in smaller {
                    in_x[active[i]] = true;
                }
            }
            Ok(None) => {
                in_x[v] = true;
                if in_x.iter().filter(|&&f| f).count() > budget {
                    return OctOutcome::NoneWithin;
                }
            }
            Err(Exhausted) => return OctOutcome::Abort,
        }
    }
    OctOutcome::Found(Modulator {
        vertices: VertexSet::from_flags(&in_x),
        target: TargetClass::Bipartite,
        method: Method::Exact,
    })
}

/// Number of vertex-disjoint odd cycles found greedily; a lower bound on the
/// transversal size.
fn odd_cycle_packing(g: &Graph) -> usize {
    let mut used = vec![false; g.vertex_count()];
    let mut count = 0;
    loop {
        let (rest, map) = g.without(&used);
        match is_bipartite(&rest) {
            Bipartiteness::Bipartite(_) => return count,
            Bipartiteness::OddCycle(c) => {
                count += 1;
                for u in c {
                    used[map[u]] = true;
                }
            }
        }
    }
}

struct Exhausted;

struct Work {
    used: u64,
    limit: u64,
}

impl Work {
    fn tick(&mut self) -> Result<(), Exhausted> {
        self.used += 1;
        if self.used > self.limit {
            Err(Exhausted)
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Role {
    Delete,
    Left,
    Right,
}

/// Given a transversal `z` of `h` (local ids), finds one of size
/// `|z| - 1` or reports that none exists.
fn compress(h: &Graph, z: &[usize], work: &mut Work) -> Result<Option<Vec<usize>>, Exhausted> {
    let mut in_z = vec![false; h.vertex_count()];
    for &u in z {
        in_z[u] = true;
    }
    let (rest, rest_map) = h.without(&in_z);
    let Bipartiteness::Bipartite(color) = is_bipartite(&rest) else {
        unreachable!("z is a transversal of h");
    };
    let mut rest_index = vec![usize::MAX; h.vertex_count()];
    for (i, &u) in rest_map.iter().enumerate() {
        rest_index[u] = i;
    }
    let ctx = Compression {
        h,
        z,
        rest: &rest,
        rest_map: &rest_map,
        rest_index: &rest_index,
        color: &color,
    };
    let mut roles = Vec::with_capacity(z.len());
    ctx.assign(&mut roles, 0, work)
}

struct Compression<'a> {
    h: &'a Graph,
    z: &'a [usize],
    rest: &'a Graph,
    rest_map: &'a [usize],
    rest_index: &'a [usize],
    color: &'a [u8],
}

impl Compression<'_> {
    fn assign(
        &self,
        roles: &mut Vec<Role>,
        deleted: usize,
        work: &mut Work,
    ) -> Result<Option<Vec<usize>>, Exhausted> {
        let target = self.z.len() - 1;
        if roles.len() == self.z.len() {
            work.tick()?;
            return self.finish(roles, target - deleted, work);
        }
        let u = self.z[roles.len()];
        for role in [Role::Left, Role::Right, Role::Delete] {
            let ok = match role {
                Role::Delete => deleted < target,
                side => roles
                    .iter()
                    .zip(self.z)
                    .all(|(&r, &w)| r != side || !self.h.has_edge(u, w)),
            };
            if !ok {
                continue;
            }
            roles.push(role);
            let found = self.assign(roles, deleted + (role == Role::Delete) as usize, work)?;
            roles.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    /// Vertices outside `z` next to a Left vertex must end up Right and vice
    /// versa. Relative to the 2-coloring of `h - z`, each such vertex either
    /// keeps or flips its color, and a connected piece cannot do both, so a
    /// vertex cut separating "keep" from "flip" vertices finishes the job.
    fn finish(
        &self,
        roles: &[Role],
        allowance: usize,
        work: &mut Work,
    ) -> Result<Option<Vec<usize>>, Exhausted> {
        let m = self.rest.vertex_count();
        let mut keep = vec![false; m];
        let mut flip = vec![false; m];
        for (&role, &u) in roles.iter().zip(self.z) {
            if role == Role::Delete {
                continue;
            }
            for &w in self.h.neighbors(u) {
                let i = self.rest_index[w];
                if i == usize::MAX {
                    continue;
                }
                // color 0 lands Left when kept, Right when flipped.
                let must_be_right = role == Role::Left;
                let kept_side_right = self.color[i] == 1;
                if must_be_right == kept_side_right {
                    keep[i] = true;
                } else {
                    flip[i] = true;
                }
            }
        }
        let cut = if keep.iter().any(|&b| b) && flip.iter().any(|&b| b) {
            match min_vertex_cut(self.rest, &keep, &flip, allowance, work)? {
                Some(cut) => cut,
                None => return Ok(None),
            }
        } else {
            Vec::new()
        };
        let mut solution: Vec<usize> = roles
            .iter()
            .zip(self.z)
            .filter(|(&r, _)| r == Role::Delete)
            .map(|(_, &u)| u)
            .collect();
        solution.extend(cut.into_iter().map(|i| self.rest_map[i]));
        solution.sort_unstable();
        Ok(Some(solution))
    }
}

/// Smallest vertex set meeting every path from a `sources` vertex to a
/// `sinks` vertex (endpoints may be cut), if it has at most `limit` vertices.
fn min_vertex_cut(
    g: &Graph,
    sources: &[bool],
    sinks: &[bool],
    limit: usize,
    work: &mut Work,
) -> Result<Option<Vec<usize>>, Exhausted> {
    let m = g.vertex_count();
    let s = 2 * m;
    let t = s + 1;
    let mut net = FlowNet::new(2 * m + 2);
    for u in 0..m {
        net.add(2 * u, 2 * u + 1, 1);
        for &w in g.neighbors(u) {
            net.add(2 * u + 1, 2 * w, FlowNet::INF);
        }
        if sources[u] {
            net.add(s, 2 * u, FlowNet::INF);
        }
        if sinks[u] {
            net.add(2 * u + 1, t, FlowNet::INF);
        }
    }
    let mut flow = 0;
    while net.augment(s, t) {
        work.tick()?;
        flow += 1;
        if flow > limit {
            return Ok(None);
        }
    }
    let reach = net.reachable(s);
    Ok(Some(
        (0..m)
            .filter(|&u| reach[2 * u] && !reach[2 * u + 1])
            .collect(),
    ))
}

struct FlowNet {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
}

impl FlowNet {
    const INF: u32 = u32::MAX / 2;

    fn new(nodes: usize) -> Self {
        FlowNet {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add(&mut self, a: usize, b: usize, c: u32) {
        self.head[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(c);
        self.head[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    /// Pushes one unit along a shortest residual path.
    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut via = vec![usize::MAX; self.head.len()];
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &e in &self.head[x] {
                let y = self.to[e];
                if !seen[y] && self.cap[e] > 0 {
                    seen[y] = true;
                    via[y] = e;
                    if y == t {
                        let mut cur = t;
                        while cur != s {
                            let e = via[cur];
                            self.cap[e] -= 1;
                            self.cap[e ^ 1] += 1;
                            cur = self.to[e ^ 1];
                        }
                        return true;
                    }
                    queue.push_back(y);
                }
            }
        }
        false
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &e in &self.head[x] {
                let y = self.to[e];
                if !seen[y] && self.cap[e] > 0 {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }
}

/// Deletes, from each odd cycle found, its vertex of largest current degree
/// (smallest id on ties) until the graph is bipartite.
pub fn oct_heuristic(g: &Graph) -> Modulator {
    let mut removed = vec![false; g.vertex_count()];
    loop {
        let (rest, map) = g.without(&removed);
        match is_bipartite(&rest) {
            Bipartiteness::Bipartite(_) => break,
            Bipartiteness::OddCycle(cycle) => {
                let pick = cycle
                    .iter()
                    .copied()
                    .max_by_key(|&u| (rest.degree(u), std::cmp::Reverse(map[u])))
                    .expect("cycles are non-empty");
                removed[map[pick]] = true;
            }
        }
    }
    Modulator {
        vertices: VertexSet::from_flags(&removed),
        target: TargetClass::Bipartite,
        method: Method::Greedy,
    }
}
