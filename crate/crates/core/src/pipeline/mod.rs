//! End to end: kernel, batching, solving, verification and accounting.

mod bench;
mod corpus;
mod emit;

use std::fs;
use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};

pub use bench::{
    bench, write_rows_csv, write_rows_json, BenchFailure, BenchOptions, BenchOutcome, BenchRow,
    FailureKind,
};
pub use corpus::{generate_corpus, CorpusEntry, CorpusManifest, CorpusSpec};
pub use emit::{emit_queries, EmittedQuery, QueryManifest};

use crate::batching::{batch_queries, BatchPlan};
use crate::error::PipelineError;
use crate::graph::{encoding_size, CliqueInstance, Graph};
use crate::io::parse_graph;
use crate::kernels::{Kernel, Query, QuerySet};
use crate::solver::{brute_force_has_clique, has_clique, Answer, SolveBudget};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verification {
    Agree,
    Disagree,
}

impl Verification {
    pub fn as_str(self) -> &'static str {
        match self {
            Verification::Agree => "agree",
            Verification::Disagree => "disagree",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub kernel: Kernel,
    /// Batching exponent; `0` keeps one query per group.
    pub c: u32,
    pub verify: bool,
    /// When false, `wall_time_ms` is reported as 0 so that reports are
    /// byte-identical across runs.
    pub timing: bool,
}

impl RunOptions {
    pub fn new(kernel: Kernel) -> Self {
        RunOptions {
            kernel,
            c: 0,
            verify: false,
            timing: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema: u32,
    pub answer: Answer,
    pub kernel: String,
    /// Degree cap of the `dbd` kernel.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<usize>,
    pub k: usize,
    pub parameter_name: String,
    pub parameter_value: usize,
    pub c: u32,
    pub group_size: usize,
    pub query_count_raw: usize,
    pub query_count_batched: usize,
    pub max_query_vertices: usize,
    pub max_query_encoding_size: u64,
    pub immediate_answer: bool,
    /// The largest query was no smaller than the input, so the input was
    /// solved as is.
    pub direct_solve: bool,
    pub wall_time_ms: u64,
    pub verified: Option<Verification>,
    #[serde(rename = "n_G")]
    pub n_g: usize,
    #[serde(rename = "m_G")]
    pub m_g: usize,
    pub n: u64,
}

#[derive(Debug, Clone)]
pub struct RunOutput {
    pub report: RunReport,
    pub raw: QuerySet,
    pub batched: QuerySet,
    pub plan: BatchPlan,
}

pub fn read_graph(path: &Path) -> Result<Graph, PipelineError> {
    let text = fs::read_to_string(path).map_err(|e| PipelineError::io(path, e))?;
    parse_graph(&text).map_err(|source| PipelineError::Graph {
        path: path.to_path_buf(),
        source,
    })
}

pub fn run_file(path: &Path, k: usize, opts: &RunOptions) -> Result<RunOutput, PipelineError> {
    let graph = read_graph(path)?;
    run(&CliqueInstance::new(graph, k)?, opts)
}

fn solve(inst: &CliqueInstance) -> bool {
    has_clique(inst, SolveBudget::unlimited())
        .answer()
        .expect("unlimited budget")
        .is_yes()
}

#[cfg(feature = "parallel")]
fn solve_any(queries: &[Query]) -> bool {
    use rayon::prelude::*;
    queries.par_iter().any(|q| solve(&q.instance))
}

#[cfg(not(feature = "parallel"))]
fn solve_any(queries: &[Query]) -> bool {
    queries.iter().any(|q| solve(&q.instance))
}

/// Kernel, batch with exponent `opts.c`, solve every batched query and OR
/// the answers. Fails with [`PipelineError::Invariant`] if a count or size
/// law is broken; a disagreement with the oracle is reported, not raised.
pub fn run(inst: &CliqueInstance, opts: &RunOptions) -> Result<RunOutput, PipelineError> {
    let start = opts.timing.then(Instant::now);
    let g = &inst.graph;
    let n = encoding_size(g);
    let raw = opts.kernel.apply(inst);
    let (batched, plan) = batch_queries(&raw, opts.c, n);
    check_invariants(inst, &raw, &batched, &plan)?;

    let direct_solve = !raw.is_empty() && raw.max_query_encoding_size() >= n;
    let answer = match raw.immediate_answer {
        Some(a) => a,
        None if direct_solve => Answer::from(solve(inst)),
        None => Answer::from(solve_any(&batched.queries)),
    };
    let wall_time_ms = start.map_or(0, |s| s.elapsed().as_millis() as u64);
    let verified = opts.verify.then(|| {
        if brute_force_has_clique(inst) == answer {
            Verification::Agree
        } else {
            Verification::Disagree
        }
    });
    let report = RunReport {
        schema: 1,
        answer,
        kernel: opts.kernel.name().to_string(),
        d: match opts.kernel {
            Kernel::BoundedDegree { d } => Some(d),
            _ => None,
        },
        k: inst.k,
        parameter_name: raw.parameter_name.to_string(),
        parameter_value: raw.parameter_value,
        c: opts.c,
        group_size: plan.group_size,
        query_count_raw: raw.len(),
        query_count_batched: batched.len(),
        max_query_vertices: batched.max_query_vertices(),
        max_query_encoding_size: batched.max_query_encoding_size(),
        immediate_answer: raw.immediate_answer.is_some(),
        direct_solve,
        wall_time_ms,
        verified,
        n_g: g.vertex_count(),
        m_g: g.edge_count(),
        n,
    };
    Ok(RunOutput {
        report,
        raw,
        batched,
        plan,
    })
}

fn violation(msg: String) -> Result<(), PipelineError> {
    Err(PipelineError::Invariant(msg))
}

/// `origin` is strictly increasing, in range, and the query graph is the
/// subgraph of `g` it induces.
fn is_induced(g: &Graph, q: &Query) -> bool {
    let Some(origin) = &q.origin else {
        return false;
    };
    let qg = &q.instance.graph;
    if origin.len() != qg.vertex_count()
        || origin.windows(2).any(|w| w[0] >= w[1])
        || origin.last().is_some_and(|&v| v >= g.vertex_count())
    {
        return false;
    }
    if qg.edges().any(|(a, b)| !g.has_edge(origin[a], origin[b])) {
        return false;
    }
    let inside: usize = origin
        .iter()
        .map(|&u| {
            g.neighbors(u)
                .iter()
                .filter(|&&w| w > u && origin.binary_search(&w).is_ok())
                .count()
        })
        .sum();
    inside == qg.edge_count()
}

pub fn check_invariants(
    inst: &CliqueInstance,
    raw: &QuerySet,
    batched: &QuerySet,
    plan: &BatchPlan,
) -> Result<(), PipelineError> {
    let g = &inst.graph;
    let kernel = raw.kernel;
    if raw.immediate_answer.is_some() && !raw.is_empty() {
        return violation(format!("{kernel}: immediate answer together with queries"));
    }
    let bound = kernel.query_count_bound(g);
    if raw.len() > bound {
        return violation(format!(
            "{kernel}: {} queries exceed the bound {bound}",
            raw.len()
        ));
    }
    for (i, q) in raw.queries.iter().enumerate() {
        if q.instance.k != inst.k {
            return violation(format!(
                "{kernel}: query {i} searches for k = {}",
                q.instance.k
            ));
        }
        if let Some(s) = raw.size_bound {
            if q.vertex_count() > s {
                return violation(format!(
                    "{kernel}: query {i} has {} vertices, bound {s}",
                    q.vertex_count()
                ));
            }
        }
        if !is_induced(g, q) {
            return violation(format!("{kernel}: query {i} is not an induced subgraph"));
        }
    }
    let expected = raw.len().div_ceil(plan.group_size);
    if batched.len() != expected || plan.groups.len() != expected || batched.len() > raw.len() {
        return violation(format!(
            "{kernel}: {} batched queries from {} with group size {}",
            batched.len(),
            raw.len(),
            plan.group_size
        ));
    }
    if batched.immediate_answer != raw.immediate_answer {
        return violation(format!("{kernel}: batching changed the immediate answer"));
    }
    let k_star = raw.queries.iter().map(|q| q.instance.k).max().unwrap_or(0);
    let per_group = raw.max_query_vertices() + k_star;
    for (i, q) in batched.queries.iter().enumerate() {
        if q.vertex_count() > plan.group_size.saturating_mul(per_group) {
            return violation(format!(
                "{kernel}: batched query {i} has {} vertices, bound {} * {per_group}",
                q.vertex_count(),
                plan.group_size
            ));
        }
    }
    Ok(())
}
