//! Acceptance checks, one printed PASS/FAIL line per criterion. Runs without
//! the libtest harness so the lines always reach the output.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use orkernel::batching::batch_queries;
use orkernel::decomp::{
    block_decomposition, chordality_check, degeneracy_ordering, heuristic_tree_decomposition,
    reduce_bag_count, validate_tree_decomposition, Chordality,
};
use orkernel::kernels::{kernel_chordal, kernel_longest_odd_cycle, kernel_oct_with_modulator};
use orkernel::modulators::{
    bounded_degree_modulator, chordal_modulator_greedy, oct_exact, oct_heuristic,
    BoundedDegreeOutcome, OctOutcome,
};
use orkernel::pipeline::{
    bench, generate_corpus, run, write_rows_csv, BenchOptions, CorpusSpec, RunOptions,
};
use orkernel::solver::{has_clique, SolveBudget};
use orkernel::{generators, Answer, CliqueInstance, Graph, Kernel, QuerySet};

use common::*;

const MAX_DISAGREEMENTS: usize = 0;
const MAX_VIOLATIONS: usize = 0;
const SUITE_SIZE: usize = 480;
const SUITE_SEED: u64 = 20_240_601;
const MIN_INSTANCES_PER_KERNEL: usize = 400;
const OR_SUITE_TIME_LIMIT: Duration = Duration::from_secs(5 * 60);
const BATCHING_TIME_LIMIT: Duration = Duration::from_secs(3 * 60);
const MODULATOR_TIME_LIMIT: Duration = Duration::from_secs(5 * 60);
const DECOMP_CORPUS: usize = 600;
const DECOMP_MAX_N: usize = 9;
const OCT_GRAPHS: usize = 320;
const OCT_MAX_N: usize = 14;
const DBD_GRAPHS: usize = 120;
const SHORT_CIRCUIT_INSTANCES: usize = 100;
const BATCH_EXPONENTS: [u32; 3] = [0, 1, 2];

fn kernels_for(i: usize) -> [Kernel; 5] {
    Kernel::all(i % 3)
}

fn answer(b: bool) -> Answer {
    Answer::from(b)
}

fn resolve(qs: &QuerySet) -> Answer {
    qs.resolve_with(|q| answer(instance_oracle(q)))
}

/// Independent encoding size: `n_G + m_G * ceil(log2 max(n_G, 2))`.
fn encoding(g: &Graph) -> u64 {
    let n = g.vertex_count().max(2) as u64;
    let bits = 64 - (n - 1).leading_zeros() as u64;
    g.vertex_count() as u64 + g.edge_count() as u64 * bits
}

/// Independent group size `max(1, ceil((log2 n)^c))`, via integer search.
fn expected_group(n: u64, c: u32) -> usize {
    let l = (n.max(1) as f64).log2();
    let target = l.powi(c as i32);
    let mut g = 1usize;
    while (g as f64) < target {
        g += 1;
    }
    g
}

/// Vertices common to every query, i.e. a superset of the modulator.
fn common_vertices(qs: &QuerySet, n: usize) -> Vec<bool> {
    let mut common = vec![!qs.queries.is_empty(); n];
    for q in &qs.queries {
        let origin = q.origin.as_ref().unwrap();
        let mut here = vec![false; n];
        for &v in origin {
            here[v] = true;
        }
        for v in 0..n {
            common[v] &= here[v];
        }
    }
    common
}

struct Run {
    index: usize,
    kernel: Kernel,
    qs: QuerySet,
}

struct Shared {
    suite: Vec<SuiteInstance>,
    truth: Vec<bool>,
    runs: Vec<Run>,
    oct_branch: Vec<(QuerySet, Vec<bool>)>,
    build_time: Duration,
}

fn build_shared() -> Shared {
    let start = Instant::now();
    let suite = or_suite(SUITE_SIZE, SUITE_SEED);
    let truth: Vec<bool> = suite.iter().map(|s| instance_oracle(&s.inst)).collect();
    let mut runs = Vec::new();
    let mut oct_branch = Vec::new();
    for (index, s) in suite.iter().enumerate() {
        for kernel in kernels_for(index) {
            runs.push(Run {
                index,
                kernel,
                qs: kernel.apply(&s.inst),
            });
        }
        let x = oct_heuristic(&s.inst.graph);
        let flags = x.vertices.to_flags();
        oct_branch.push((kernel_oct_with_modulator(&s.inst, &x), flags));
    }
    Shared {
        suite,
        truth,
        runs,
        oct_branch,
        build_time: start.elapsed(),
    }
}

fn c1_or_correctness(sh: &Shared) -> Result<String, String> {
    let start = Instant::now();
    let mut per_kernel = std::collections::BTreeMap::<&str, usize>::new();
    let mut bad = Vec::new();
    for r in &sh.runs {
        *per_kernel.entry(r.kernel.name()).or_default() += 1;
        if resolve(&r.qs) != answer(sh.truth[r.index]) {
            bad.push(format!(
                "{} #{} ({})",
                r.kernel, r.index, sh.suite[r.index].family
            ));
        }
    }
    let mut immediate_oct = 0;
    for (i, (qs, _)) in sh.oct_branch.iter().enumerate() {
        if resolve(qs) != answer(sh.truth[i]) {
            bad.push(format!("oct query branch #{i}"));
        }
    }
    for r in sh.runs.iter().filter(|r| r.kernel == Kernel::Oct) {
        immediate_oct += r.qs.immediate_answer.is_some() as usize;
    }
    let elapsed = sh.build_time + start.elapsed();
    let min = per_kernel.values().copied().min().unwrap_or(0);
    if bad.len() > MAX_DISAGREEMENTS {
        return Err(format!("{} disagreements, first: {}", bad.len(), bad[0]));
    }
    if min < MIN_INSTANCES_PER_KERNEL {
        return Err(format!("only {min} instances for some kernel"));
    }
    if elapsed > OR_SUITE_TIME_LIMIT {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!(
        "{min} instances per kernel, 0 disagreements; oct solved {immediate_oct} directly and its query branch was checked on all {}; {:.1}s",
        sh.oct_branch.len(),
        elapsed.as_secs_f64()
    ))
}

fn c2_query_counts(sh: &Shared) -> Result<String, String> {
    let mut bad = Vec::new();
    let mut checked = 0;
    let mut check = |name: &str, idx: usize, qs: &QuerySet| {
        let g = &sh.suite[idx].inst.graph;
        let (n, m) = (g.vertex_count(), g.edge_count());
        let bound = match name {
            "degeneracy" | "chordal" => n,
            "oct" => m + n,
            "dbd" => n.max(1),
            "loc" => n + 2 * m,
            _ => unreachable!(),
        };
        checked += 1;
        if qs.len() > bound {
            bad.push(format!("{name} #{idx}: {} > {bound}", qs.len()));
        }
    };
    for r in &sh.runs {
        check(r.kernel.name(), r.index, &r.qs);
    }
    for (i, (qs, _)) in sh.oct_branch.iter().enumerate() {
        check("oct", i, qs);
    }
    if bad.len() > MAX_VIOLATIONS {
        return Err(format!("{} violations, first: {}", bad.len(), bad[0]));
    }
    Ok(format!("{checked} query sets within their count bounds"))
}

fn c3_query_sizes(sh: &Shared) -> Result<String, String> {
    let mut bad = Vec::new();
    let mut queries = 0;
    for r in &sh.runs {
        let inst = &sh.suite[r.index].inst;
        let g = &inst.graph;
        let qs = &r.qs;
        let largest = qs.max_query_vertices();
        queries += qs.len();
        let (bound, certified) = match r.kernel {
            Kernel::Degeneracy => {
                let p = degeneracy_by_peeling(g);
                if qs.parameter_value != p {
                    bad.push(format!(
                        "degeneracy #{}: reported {} != {p}",
                        r.index, qs.parameter_value
                    ));
                }
                (p + 1, true)
            }
            Kernel::BoundedDegree { d } => {
                let common = common_vertices(qs, g.vertex_count());
                let ok = max_degree_without(g, &common) <= d;
                (qs.parameter_value + d + 1, ok)
            }
            Kernel::Chordal => {
                let common = common_vertices(qs, g.vertex_count());
                let ok = qs.is_empty() || chordal_without(g, &common);
                (qs.parameter_value + inst.k, ok)
            }
            Kernel::Oct => {
                let common = common_vertices(qs, g.vertex_count());
                let ok = qs.is_empty() || bipartite_without(g, &common);
                (qs.parameter_value + 2, ok)
            }
            Kernel::LongestOddCycle => continue,
        };
        if largest > bound {
            bad.push(format!(
                "{} #{}: query of {largest} vertices > {bound}",
                r.kernel, r.index
            ));
        }
        if !certified {
            bad.push(format!(
                "{} #{}: shared vertices do not leave the target class",
                r.kernel, r.index
            ));
        }
    }
    for (i, (qs, x)) in sh.oct_branch.iter().enumerate() {
        let g = &sh.suite[i].inst.graph;
        let size = x.iter().filter(|&&b| b).count();
        queries += qs.len();
        if !bipartite_without(g, x) {
            bad.push(format!("oct heuristic #{i} leaves an odd cycle"));
        }
        if qs.max_query_vertices() > size + 2 {
            bad.push(format!(
                "oct query branch #{i}: {} > {}",
                qs.max_query_vertices(),
                size + 2
            ));
        }
    }
    if bad.len() > MAX_VIOLATIONS {
        return Err(format!("{} violations, first: {}", bad.len(), bad[0]));
    }
    Ok(format!("{queries} queries within their size bounds"))
}

fn c4_batching(sh: &Shared) -> Result<String, String> {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut checked = 0;
    for r in &sh.runs {
        let g = &sh.suite[r.index].inst.graph;
        let n = encoding(g);
        let raw_answer = resolve(&r.qs);
        for c in BATCH_EXPONENTS {
            let (b, _) = batch_queries(&r.qs, c, n);
            let expected = r.qs.len().div_ceil(expected_group(n, c));
            checked += 1;
            if b.len() != expected {
                bad.push(format!(
                    "{} #{} c={c}: {} batched, expected {expected}",
                    r.kernel,
                    r.index,
                    b.len()
                ));
            }
            if resolve(&b) != raw_answer {
                bad.push(format!(
                    "{} #{} c={c}: batched answer differs",
                    r.kernel, r.index
                ));
            }
        }
    }
    let elapsed = start.elapsed();
    if bad.len() > MAX_VIOLATIONS {
        return Err(format!("{} violations, first: {}", bad.len(), bad[0]));
    }
    if elapsed > BATCHING_TIME_LIMIT {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!(
        "{checked} (query set, c) pairs obey the count law and keep the answer; {:.1}s",
        elapsed.as_secs_f64()
    ))
}

fn c5_decompositions(sh: &Shared) -> Result<String, String> {
    let corpus = small_graphs(DECOMP_CORPUS, DECOMP_MAX_N, 5);
    let mut bad = Vec::new();
    for (i, g) in corpus.iter().enumerate() {
        if degeneracy_ordering(g).degeneracy != degeneracy_by_orderings(g) {
            bad.push(format!("(a) graph {i}: degeneracy"));
        }
        let chordal = matches!(chordality_check(g), Chordality::Chordal(_));
        if chordal == has_long_induced_cycle(g) {
            bad.push(format!("(b) graph {i}: chordality"));
        }
    }
    let all_graphs = corpus.iter().chain(sh.suite.iter().map(|s| &s.inst.graph));
    let mut total = 0;
    for (i, g) in all_graphs.enumerate() {
        total += 1;
        let (n, m) = (g.vertex_count(), g.edge_count());
        let td = heuristic_tree_decomposition(g);
        if validate_tree_decomposition(&td, g).is_err() || !tree_decomposition_is_valid(g, &td) {
            bad.push(format!("(c) graph {i}: invalid tree decomposition"));
            continue;
        }
        match reduce_bag_count(&td, g) {
            Ok(r)
                if r.bags.len() <= n
                    && tree_decomposition_is_valid(g, &r)
                    && r.width() == td.width() => {}
            _ => bad.push(format!("(c) graph {i}: reduce_bag_count")),
        }
        let blocks = block_decomposition(g);
        let partitions = g.edges().all(|(u, v)| {
            blocks
                .blocks
                .iter()
                .filter(|b| b.contains(u) && b.contains(v))
                .count()
                == 1
        });
        let covered = g
            .vertices()
            .all(|v| blocks.blocks.iter().any(|b| b.contains(v)));
        if !partitions || !covered || blocks.total_size() > n + 2 * m {
            bad.push(format!("(d) graph {i}: blocks"));
        }
    }
    if bad.len() > MAX_VIOLATIONS {
        return Err(format!("{} violations, first: {}", bad.len(), bad[0]));
    }
    Ok(format!(
        "(a)(b) {} graphs with at most {DECOMP_MAX_N} vertices, (c)(d) {total} graphs",
        corpus.len()
    ))
}

fn c6_modulators() -> Result<String, String> {
    let start = Instant::now();
    let mut bad = Vec::new();
    let oct_graphs: Vec<Graph> = small_graphs(OCT_GRAPHS, OCT_MAX_N, 6);
    for (i, g) in oct_graphs.iter().enumerate() {
        let best = min_oct(g);
        match oct_exact(g, g.vertex_count()) {
            OctOutcome::Found(x) => {
                if x.len() != best || !bipartite_without(g, &x.vertices.to_flags()) {
                    bad.push(format!(
                        "oct graph {i}: found {} vs minimum {best}",
                        x.len()
                    ));
                }
                if oct_exact(g, g.vertex_count()) != OctOutcome::Found(x) {
                    bad.push(format!("oct graph {i}: not deterministic"));
                }
            }
            other => bad.push(format!("oct graph {i}: {other:?}")),
        }
        if best > 0 {
            if let OctOutcome::Found(_) = oct_exact(g, best - 1) {
                bad.push(format!("oct graph {i}: found below the minimum"));
            }
        }
        let h = oct_heuristic(g);
        if !bipartite_without(g, &h.vertices.to_flags()) {
            bad.push(format!("oct heuristic graph {i}"));
        }
        let c = chordal_modulator_greedy(g);
        if !chordal_without(g, &c.vertices.to_flags()) || c != chordal_modulator_greedy(g) {
            bad.push(format!("chordal modulator graph {i}"));
        }
    }
    let dbd_graphs = small_graphs(DBD_GRAPHS, OCT_MAX_N, 7);
    let mut dbd_cases = 0;
    for (i, g) in dbd_graphs.iter().enumerate() {
        for d in 0..=2 {
            let best = min_degree_deletion(g, d);
            for p in 0..=3 {
                dbd_cases += 1;
                match bounded_degree_modulator(g, d, p) {
                    BoundedDegreeOutcome::No if best <= p => {
                        bad.push(format!("dbd graph {i} d={d} p={p}: No but optimum {best}"))
                    }
                    BoundedDegreeOutcome::No => {}
                    BoundedDegreeOutcome::Found(x) => {
                        if x.len() > p * (p + d + 1) {
                            bad.push(format!("dbd graph {i} d={d} p={p}: |X| = {}", x.len()));
                        }
                        if max_degree_without(g, &x.vertices.to_flags()) > d {
                            bad.push(format!("dbd graph {i} d={d} p={p}: does not certify"));
                        }
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    if bad.len() > MAX_VIOLATIONS {
        return Err(format!("{} violations, first: {}", bad.len(), bad[0]));
    }
    if elapsed > MODULATOR_TIME_LIMIT {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!(
        "oct_exact minimum on {OCT_GRAPHS} graphs, {dbd_cases} bounded-degree cases, all modulators certify; {:.1}s",
        elapsed.as_secs_f64()
    ))
}

fn bipartite_inputs() -> Vec<Graph> {
    let mut out = Vec::new();
    for seed in 0..60 {
        out.push(generators::bipartite_plus_edges(
            2 + seed as usize % 29,
            0.3 + 0.01 * seed as f64,
            0,
            seed,
        ));
    }
    for n in 0..20 {
        out.push(Graph::cycle(2 * n + 4));
        out.push(Graph::path(n));
    }
    for n in 0..10 {
        out.push(Graph::star(n));
        out.push(Graph::empty(n));
    }
    out
}

fn c7_immediate_answers() -> Result<String, String> {
    let mut bad = Vec::new();
    let bipartite = bipartite_inputs();
    for (i, g) in bipartite.iter().enumerate() {
        if !bipartite_without(g, &vec![false; g.vertex_count()]) {
            bad.push(format!("input {i} is not bipartite"));
            continue;
        }
        let inst = CliqueInstance::new(g.clone(), 3).unwrap();
        let qs = kernel_longest_odd_cycle(&inst);
        if !qs.is_empty() || qs.immediate_answer != Some(Answer::No) {
            bad.push(format!(
                "bipartite {i}: {} queries, {:?}",
                qs.len(),
                qs.immediate_answer
            ));
        }
        let report = run(&inst, &RunOptions::new(Kernel::LongestOddCycle))
            .map_err(|e| e.to_string())?
            .report;
        if report.query_count_raw != 0 || report.answer != Answer::No {
            bad.push(format!("bipartite {i}: pipeline"));
        }
    }
    let mut chordal_cases = 0;
    for seed in 0..100u64 {
        let g = interval_graph(5 + seed as usize % 26, seed);
        if !is_chordal_by_simplicial_deletion(&g) {
            bad.push(format!("interval graph {seed} is not chordal"));
            continue;
        }
        let omega = clique_number(&g);
        for k in 1..=omega {
            chordal_cases += 1;
            let qs = kernel_chordal(&CliqueInstance::new(g.clone(), k).unwrap());
            if qs.immediate_answer != Some(Answer::Yes) || !qs.is_empty() {
                bad.push(format!("chordal {seed} k={k}: no immediate Yes"));
            }
        }
    }
    let mut short = 0;
    for k in 1..=2usize {
        for (i, g) in small_graphs(SHORT_CIRCUIT_INSTANCES, 20, 70 + k as u64)
            .into_iter()
            .enumerate()
        {
            let g = if i % 10 == 0 { Graph::empty(i % 3) } else { g };
            let truth = answer(clique_oracle(&g, k));
            let inst = CliqueInstance::new(g, k).unwrap();
            short += 1;
            let qs = kernel_longest_odd_cycle(&inst);
            if qs.immediate_answer != Some(truth) || !qs.is_empty() {
                bad.push(format!("loc k={k} instance {i}"));
            }
            if has_clique(&inst, SolveBudget::unlimited()).answer() != Some(truth) {
                bad.push(format!("solver k={k} instance {i}"));
            }
            for kernel in Kernel::all(1) {
                if resolve(&kernel.apply(&inst)) != truth {
                    bad.push(format!("{kernel} k={k} instance {i}"));
                }
            }
        }
    }
    if bad.len() > MAX_VIOLATIONS {
        return Err(format!("{} violations, first: {}", bad.len(), bad[0]));
    }
    Ok(format!(
        "{} bipartite inputs answer No without queries, {chordal_cases} chordal cases answer Yes at once, {short} k <= 2 instances agree",
        bipartite.len()
    ))
}

fn c8_determinism() -> Result<String, String> {
    let spec = CorpusSpec {
        seed: 8,
        sizes: vec![10, 20, 30],
        per_family: 2,
        ..CorpusSpec::default()
    };
    let a = tempfile::tempdir().map_err(|e| e.to_string())?;
    let b = tempfile::tempdir().map_err(|e| e.to_string())?;
    let ma = generate_corpus(a.path(), &spec).map_err(|e| e.to_string())?;
    generate_corpus(b.path(), &spec).map_err(|e| e.to_string())?;
    for e in &ma.instances {
        let read = |d: &std::path::Path| std::fs::read(d.join(&e.file)).unwrap();
        if read(a.path()) != read(b.path()) {
            return Err(format!("corpus file {} differs", e.file));
        }
    }
    let opts = BenchOptions {
        kernels: Kernel::all(2).to_vec(),
        cs: BATCH_EXPONENTS.to_vec(),
        verify: true,
        timing: false,
    };
    let csv = |dir: &std::path::Path| -> Result<(Vec<u8>, usize), String> {
        let out = bench(dir, &opts).map_err(|e| e.to_string())?;
        if !out.failures.is_empty() {
            return Err(format!("bench failures: {:?}", out.failures));
        }
        let mut buf = Vec::new();
        write_rows_csv(&out.rows, &mut buf).map_err(|e| e.to_string())?;
        Ok((buf, out.rows.len()))
    };
    let (first, rows) = csv(a.path())?;
    let (second, _) = csv(a.path())?;
    let (third, _) = csv(b.path())?;
    if first != second || first != third {
        return Err("CSV output differs between runs".into());
    }
    Ok(format!(
        "{rows} rows, {} bytes, identical across three runs",
        first.len()
    ))
}

fn main() -> ExitCode {
    let shared = build_shared();
    type Check<'a> = Box<dyn Fn() -> Result<String, String> + 'a>;
    let criteria: Vec<(&str, Check)> = vec![
        ("OR-correctness", Box::new(|| c1_or_correctness(&shared))),
        ("query-count bounds", Box::new(|| c2_query_counts(&shared))),
        ("query-size bounds", Box::new(|| c3_query_sizes(&shared))),
        ("batching law", Box::new(|| c4_batching(&shared))),
        (
            "decomposition oracles",
            Box::new(|| c5_decompositions(&shared)),
        ),
        ("modulator certification", Box::new(c6_modulators)),
        ("immediate-answer paths", Box::new(c7_immediate_answers)),
        ("determinism", Box::new(c8_determinism)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({detail})", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
