//! Browser bindings. Every export takes and returns strings; the plain
//! `*_json` functions hold the logic and are what native tests call.

use orkernel::decomp::{
    block_decomposition, chordality_check, degeneracy_ordering, heuristic_tree_decomposition,
    is_bipartite, reduce_bag_count, Bipartiteness, Chordality,
};
use orkernel::generators::{generate, Family, FamilyParams};
use orkernel::io::{parse_graph, to_edge_list};
use orkernel::modulators::{chordal_modulator_greedy, oct_exact, oct_heuristic, OctOutcome};
use orkernel::pipeline::{run, RunOptions};
use orkernel::{CliqueInstance, Graph, Kernel, PipelineError, Provenance};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Graphs above this size are refused; the page draws every vertex.
pub const MAX_VERTICES: usize = 200;

/// Queries listed in a run result; the counts are always complete.
const MAX_LISTED_QUERIES: usize = 300;

fn parse(text: &str) -> Result<Graph, String> {
    let g = parse_graph(text).map_err(|e| e.to_string())?;
    if g.vertex_count() > MAX_VERTICES {
        return Err(format!("the demo accepts at most {MAX_VERTICES} vertices"));
    }
    Ok(g)
}

fn graph_json(g: &Graph) -> Value {
    json!({
        "n": g.vertex_count(),
        "edges": g.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>(),
    })
}

/// Runs a kernel with batching exponent `c` and oracle verification.
pub fn run_kernel_json(
    edge_list: &str,
    k: usize,
    kernel: &str,
    d: usize,
    c: u32,
) -> Result<String, String> {
    let g = parse(edge_list)?;
    let inst = CliqueInstance::new(g, k).map_err(|e| e.to_string())?;
    let kernel = Kernel::parse(kernel, d).map_err(|e| e.to_string())?;
    let opts = RunOptions {
        kernel,
        c,
        verify: true,
        timing: false,
    };
    let out = run(&inst, &opts).map_err(|e: PipelineError| e.to_string())?;
    let queries: Vec<Value> = out
        .raw
        .queries
        .iter()
        .take(MAX_LISTED_QUERIES)
        .map(|q| {
            json!({
                "vertices": q.origin,
                "edges": q.instance.graph.edge_count(),
                "provenance": q.provenance,
            })
        })
        .collect();
    let groups: Vec<[usize; 2]> = out
        .batched
        .queries
        .iter()
        .filter_map(|q| match q.provenance {
            Provenance::Batch { first, len } => Some([first, len]),
            _ => None,
        })
        .collect();
    let result = json!({
        "report": out.report,
        "graph": graph_json(&inst.graph),
        "queries": queries,
        "queries_truncated": out.raw.len() > MAX_LISTED_QUERIES,
        "groups": groups,
        "size_bound": out.raw.size_bound,
    });
    Ok(result.to_string())
}

/// A generated graph as `{edge_list, planted}`.
pub fn generate_json(
    family: &str,
    n: usize,
    seed: u64,
    p: f64,
    k: usize,
) -> Result<String, String> {
    if n > MAX_VERTICES {
        return Err(format!("the demo accepts at most {MAX_VERTICES} vertices"));
    }
    let family: Family = family.parse().map_err(|e: PipelineError| e.to_string())?;
    let params = FamilyParams {
        p,
        k,
        ..FamilyParams::default()
    };
    let generated = generate(family, n, seed, &params);
    Ok(json!({
        "edge_list": to_edge_list(&generated.graph),
        "planted": generated.planted,
    })
    .to_string())
}

/// One structural view of the graph: `degeneracy`, `blocks`, `treedecomp`,
/// `oct` or `chordal`.
pub fn decompose_json(edge_list: &str, kind: &str) -> Result<String, String> {
    let g = parse(edge_list)?;
    let detail = match kind {
        "degeneracy" => {
            let ord = degeneracy_ordering(&g);
            json!({ "order": ord.order, "degeneracy": ord.degeneracy })
        }
        "blocks" => {
            let b = block_decomposition(&g);
            json!({
                "blocks": b.blocks.iter().map(|s| s.members().to_vec()).collect::<Vec<_>>(),
                "cut_vertices": b.cut_vertices.members(),
            })
        }
        "treedecomp" => {
            let td = reduce_bag_count(&heuristic_tree_decomposition(&g), &g)
                .map_err(|e| e.to_string())?;
            json!({
                "bags": td.bags.iter().map(|s| s.members().to_vec()).collect::<Vec<_>>(),
                "tree_edges": td.tree_edges,
                "width": td.width(),
            })
        }
        "oct" => {
            let (x, exact) = match oct_exact(&g, 12) {
                OctOutcome::Found(x) => (x, true),
                OctOutcome::NoneWithin | OctOutcome::Abort => (oct_heuristic(&g), false),
            };
            let (rest, map) = g.without(&x.vertices.to_flags());
            let mut side = vec![None; g.vertex_count()];
            if let Bipartiteness::Bipartite(colors) = is_bipartite(&rest) {
                for (a, &c) in colors.iter().enumerate() {
                    side[map[a]] = Some(c);
                }
            }
            json!({ "modulator": x.vertices.members(), "exact": exact, "side": side })
        }
        "chordal" => {
            let x = chordal_modulator_greedy(&g);
            let (rest, map) = g.without(&x.vertices.to_flags());
            let peo = match chordality_check(&rest) {
                Chordality::Chordal(peo) => peo.order.iter().map(|&a| map[a]).collect::<Vec<_>>(),
                Chordality::NotChordal(_) => Vec::new(),
            };
            json!({ "modulator": x.vertices.members(), "peo": peo })
        }
        other => return Err(format!("unknown view `{other}`")),
    };
    Ok(json!({ "kind": kind, "graph": graph_json(&g), "detail": detail }).to_string())
}

#[wasm_bindgen]
pub fn run_kernel(
    edge_list: &str,
    k: usize,
    kernel: &str,
    d: usize,
    c: u32,
) -> Result<String, JsError> {
    run_kernel_json(edge_list, k, kernel, d, c).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn generate_graph(
    family: &str,
    n: usize,
    seed: u64,
    p: f64,
    k: usize,
) -> Result<String, JsError> {
    generate_json(family, n, seed, p, k).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn decompose(edge_list: &str, kind: &str) -> Result<String, JsError> {
    decompose_json(edge_list, kind).map_err(|e| JsError::new(&e))
}
