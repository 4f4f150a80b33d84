use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::PipelineError;
use crate::graph::CliqueInstance;
use crate::kernels::Kernel;
use crate::solver::Answer;

use super::{read_graph, run, CorpusManifest, RunOptions, Verification};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchOptions {
    pub kernels: Vec<Kernel>,
    pub cs: Vec<u32>,
    pub verify: bool,
    pub timing: bool,
}

/// One CSV row; field order is the column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRow {
    pub file: String,
    pub kernel: String,
    pub c: u32,
    #[serde(rename = "n_G")]
    pub n_g: usize,
    #[serde(rename = "m_G")]
    pub m_g: usize,
    pub n: u64,
    pub parameter_value: usize,
    pub raw: usize,
    pub batched: usize,
    pub max_q_vertices: usize,
    pub max_q_size: u64,
    pub answer: Answer,
    pub verified: Option<Verification>,
    pub ms: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FailureKind {
    Unreadable,
    Invariant,
    Disagree,
    /// The answer contradicts the manifest's known answer.
    Expected,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchFailure {
    pub file: String,
    pub kind: FailureKind,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BenchOutcome {
    pub rows: Vec<BenchRow>,
    pub failures: Vec<BenchFailure>,
}

/// Runs every (file, kernel, c) of the corpus in `dir`, in manifest order,
/// then kernel order, then `c` order. Bad entries are recorded in
/// `failures` and skipped; only an unusable manifest is an error.
pub fn bench(dir: &Path, opts: &BenchOptions) -> Result<BenchOutcome, PipelineError> {
    let manifest = CorpusManifest::load(dir)?;
    let mut out = BenchOutcome::default();
    for entry in &manifest.instances {
        let fail = |kind, message: String| BenchFailure {
            file: entry.file.clone(),
            kind,
            message,
        };
        let inst = match read_graph(&dir.join(&entry.file))
            .and_then(|g| Ok(CliqueInstance::new(g, entry.k)?))
        {
            Ok(inst) => inst,
            Err(e) => {
                out.failures
                    .push(fail(FailureKind::Unreadable, e.to_string()));
                continue;
            }
        };
        for &kernel in &opts.kernels {
            for &c in &opts.cs {
                let run_opts = RunOptions {
                    kernel,
                    c,
                    verify: opts.verify,
                    timing: opts.timing,
                };
                let report = match run(&inst, &run_opts) {
                    Ok(o) => o.report,
                    Err(e) => {
                        out.failures
                            .push(fail(FailureKind::Invariant, format!("{kernel} c={c}: {e}")));
                        continue;
                    }
                };
                if report.verified == Some(Verification::Disagree) {
                    out.failures.push(fail(
                        FailureKind::Disagree,
                        format!(
                            "{kernel} c={c}: answered {} against the oracle",
                            report.answer
                        ),
                    ));
                }
                if let Some(expected) = entry.expected {
                    if expected != report.answer {
                        out.failures.push(fail(
                            FailureKind::Expected,
                            format!(
                                "{kernel} c={c}: answered {}, expected {expected}",
                                report.answer
                            ),
                        ));
                    }
                }
                out.rows.push(BenchRow {
                    file: entry.file.clone(),
                    kernel: report.kernel,
                    c,
                    n_g: report.n_g,
                    m_g: report.m_g,
                    n: report.n,
                    parameter_value: report.parameter_value,
                    raw: report.query_count_raw,
                    batched: report.query_count_batched,
                    max_q_vertices: report.max_query_vertices,
                    max_q_size: report.max_query_encoding_size,
                    answer: report.answer,
                    verified: report.verified,
                    ms: report.wall_time_ms,
                });
            }
        }
    }
    Ok(out)
}

pub fn write_rows_csv<W: Write>(rows: &[BenchRow], w: W) -> Result<(), PipelineError> {
    let mut wtr = csv::Writer::from_writer(w);
    if rows.is_empty() {
        wtr.write_record([
            "file",
            "kernel",
            "c",
            "n_G",
            "m_G",
            "n",
            "parameter_value",
            "raw",
            "batched",
            "max_q_vertices",
            "max_q_size",
            "answer",
            "verified",
            "ms",
        ])?;
    }
    for row in rows {
        wtr.serialize(row)?;
    }
    wtr.flush()
        .map_err(|e| PipelineError::io("<csv output>", e))?;
    Ok(())
}

pub fn write_rows_json<W: Write>(rows: &[BenchRow], mut w: W) -> Result<(), PipelineError> {
    serde_json::to_writer_pretty(&mut w, rows)?;
    w.write_all(b"\n")
        .map_err(|e| PipelineError::io("<json output>", e))
}
