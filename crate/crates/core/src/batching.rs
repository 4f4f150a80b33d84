//! Groups OR-queries into fewer, larger instances.
//!
//! Instances are brought to a common `k*` by adding apexes, then the group
//! is replaced by its disjoint union: a disjoint union has a `k*`-clique
//! iff one of its parts does.

use std::ops::Range;

use thiserror::Error;

use crate::graph::CliqueInstance;
use crate::kernels::{Provenance, Query, QuerySet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("cannot compose an empty sequence of instances")]
pub struct EmptyBatch;

/// Raises every instance to `k* = max k` by adding `k* - k` universal
/// vertices. Answers are unchanged.
pub fn equalize_k(
    instances: &[CliqueInstance],
) -> Result<(Vec<CliqueInstance>, usize), EmptyBatch> {
    let k_star = instances.iter().map(|i| i.k).max().ok_or(EmptyBatch)?;
    let raised = instances
        .iter()
        .map(|i| CliqueInstance {
            graph: i.graph.add_apexes(k_star - i.k),
            k: k_star,
        })
        .collect();
    Ok((raised, k_star))
}

/// OR-composition of clique instances: equalize, then disjoint union.
pub fn trivial_or_compose(instances: &[CliqueInstance]) -> Result<CliqueInstance, EmptyBatch> {
    let (raised, k_star) = equalize_k(instances)?;
    Ok(CliqueInstance {
        graph: crate::graph::Graph::disjoint_union(raised.iter().map(|i| &i.graph)),
        k: k_star,
    })
}

/// `max(1, ceil((log2 n)^c))`, with `n` clamped to at least 1.
pub fn group_size(c: u32, n: u64) -> usize {
    let log = (n.max(1) as f64).log2();
    let g = log.powi(c as i32).ceil();
    if g >= usize::MAX as f64 {
        usize::MAX
    } else {
        (g as usize).max(1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BatchPlan {
    pub group_size: usize,
    /// Consecutive query ranges, each of length `group_size` except maybe
    /// the last.
    pub groups: Vec<Range<usize>>,
    pub c: u32,
    /// Encoding size of the original instance.
    pub n: u64,
}

impl BatchPlan {
    pub fn new(query_count: usize, c: u32, n: u64) -> BatchPlan {
        let g = group_size(c, n);
        let groups = (0..query_count)
            .step_by(g)
            .map(|s| s..s.saturating_add(g).min(query_count))
            .collect();
        BatchPlan {
            group_size: g,
            groups,
            c,
            n,
        }
    }
}

/// Replaces each group of consecutive queries by its composition. The
/// immediate answer, if any, is passed through unchanged.
pub fn batch_queries(qs: &QuerySet, c: u32, n: u64) -> (QuerySet, BatchPlan) {
    let plan = BatchPlan::new(qs.queries.len(), c, n);
    let queries = plan
        .groups
        .iter()
        .map(|r| {
            let parts: Vec<CliqueInstance> = qs.queries[r.clone()]
                .iter()
                .map(|q| q.instance.clone())
                .collect();
            Query {
                instance: trivial_or_compose(&parts).expect("groups are non-empty"),
                origin: None,
                provenance: Provenance::Batch {
                    first: r.start,
                    len: r.len(),
                },
            }
        })
        .collect();
    let batched = QuerySet {
        queries,
        size_bound: None,
        ..qs.clone_header()
    };
    (batched, plan)
}
