use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::PipelineError;
use crate::io::to_edge_list;
use crate::kernels::Provenance;
use crate::solver::Answer;

use super::RunOutput;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmittedQuery {
    pub file: String,
    pub k: usize,
    pub vertices: usize,
    pub edges: usize,
    pub provenance: Provenance,
    /// Provenance of every unbatched query composed into this one.
    pub parts: Vec<Provenance>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryManifest {
    pub schema: u32,
    pub kernel: String,
    pub k_star: usize,
    pub parameter_name: String,
    pub parameter_value: usize,
    pub immediate_answer: Option<Answer>,
    pub c: u32,
    pub group_size: usize,
    pub queries: Vec<EmittedQuery>,
}

/// Writes the batched queries as `query_0000.el`, `query_0001.el`, ... and
/// a `manifest.json` describing them.
pub fn emit_queries(dir: &Path, out: &RunOutput) -> Result<QueryManifest, PipelineError> {
    fs::create_dir_all(dir).map_err(|e| PipelineError::io(dir, e))?;
    let mut queries = Vec::with_capacity(out.batched.len());
    for (i, q) in out.batched.queries.iter().enumerate() {
        let file = format!("query_{i:04}.el");
        let path = dir.join(&file);
        fs::write(&path, to_edge_list(&q.instance.graph))
            .map_err(|e| PipelineError::io(&path, e))?;
        let parts = match q.provenance {
            Provenance::Batch { first, len } => out.raw.queries[first..first + len]
                .iter()
                .map(|r| r.provenance.clone())
                .collect(),
            _ => vec![q.provenance.clone()],
        };
        queries.push(EmittedQuery {
            file,
            k: q.instance.k,
            vertices: q.instance.graph.vertex_count(),
            edges: q.instance.graph.edge_count(),
            provenance: q.provenance.clone(),
            parts,
        });
    }
    let manifest = QueryManifest {
        schema: 1,
        kernel: out.report.kernel.clone(),
        k_star: queries.iter().map(|q| q.k).max().unwrap_or(out.report.k),
        parameter_name: out.report.parameter_name.clone(),
        parameter_value: out.report.parameter_value,
        immediate_answer: out.raw.immediate_answer,
        c: out.report.c,
        group_size: out.plan.group_size,
        queries,
    };
    let path = dir.join("manifest.json");
    let mut text = serde_json::to_string_pretty(&manifest)?;
    text.push('\n');
    fs::write(&path, text).map_err(|e| PipelineError::io(&path, e))?;
    Ok(manifest)
}
