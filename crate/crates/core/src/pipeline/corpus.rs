use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::PipelineError;
use crate::generators::{generate, Family, FamilyParams};
use crate::io::to_edge_list;
use crate::solver::Answer;

/// One graph of a corpus. `k` is always supplied here, never inferred.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub file: String,
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Known answer, e.g. Yes for a planted clique of size `>= k`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Answer>,
}

/// `manifest.json` of a corpus directory.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusManifest {
    pub schema: u32,
    pub instances: Vec<CorpusEntry>,
}

impl CorpusManifest {
    pub const FILE: &'static str = "manifest.json";

    pub fn new() -> Self {
        CorpusManifest {
            schema: 1,
            instances: Vec::new(),
        }
    }

    pub fn load(dir: &Path) -> Result<Self, PipelineError> {
        let path = dir.join(Self::FILE);
        let text = fs::read_to_string(&path).map_err(|e| PipelineError::io(&path, e))?;
        let m: CorpusManifest = serde_json::from_str(&text)
            .map_err(|e| PipelineError::Manifest(format!("{}: {e}", path.display())))?;
        if m.schema != 1 {
            return Err(PipelineError::Manifest(format!(
                "unsupported schema {}",
                m.schema
            )));
        }
        if let Some(e) = m.instances.iter().find(|e| e.k == 0) {
            return Err(PipelineError::Manifest(format!(
                "{}: k must be at least 1",
                e.file
            )));
        }
        Ok(m)
    }

    /// Loads the manifest of `dir`, or starts an empty one if there is none.
    pub fn load_or_new(dir: &Path) -> Result<Self, PipelineError> {
        if dir.join(Self::FILE).exists() {
            Self::load(dir)
        } else {
            Ok(Self::new())
        }
    }

    pub fn save(&self, dir: &Path) -> Result<(), PipelineError> {
        let path = dir.join(Self::FILE);
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        fs::write(&path, text).map_err(|e| PipelineError::io(&path, e))
    }

    /// Replaces the entry for the same file, or appends.
    pub fn upsert(&mut self, entry: CorpusEntry) {
        match self.instances.iter_mut().find(|e| e.file == entry.file) {
            Some(slot) => *slot = entry,
            None => self.instances.push(entry),
        }
    }
}

impl Default for CorpusManifest {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusSpec {
    pub seed: u64,
    pub sizes: Vec<usize>,
    pub per_family: usize,
    pub families: Vec<Family>,
    pub params: FamilyParams,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            seed: 1,
            sizes: vec![12, 20, 30],
            per_family: 2,
            families: Family::ALL.to_vec(),
            params: FamilyParams::default(),
        }
    }
}

/// Writes one edge-list file per (family, size, repetition) plus the
/// manifest. Planted cliques use `k` = planted size and record Yes; other
/// graphs cycle through k = 3, 4, 5.
pub fn generate_corpus(dir: &Path, spec: &CorpusSpec) -> Result<CorpusManifest, PipelineError> {
    fs::create_dir_all(dir).map_err(|e| PipelineError::io(dir, e))?;
    let mut manifest = CorpusManifest::new();
    let mut index = 0usize;
    for &family in &spec.families {
        for &n in &spec.sizes {
            for _ in 0..spec.per_family {
                let seed = spec.seed.wrapping_mul(1_000_003).wrapping_add(index as u64);
                let generated = generate(family, n, seed, &spec.params);
                let file = format!("g{index:03}_{}_{n}.el", family.name());
                let path = dir.join(&file);
                fs::write(&path, to_edge_list(&generated.graph))
                    .map_err(|e| PipelineError::io(&path, e))?;
                let (k, expected) = match &generated.planted {
                    Some(p) if !p.is_empty() => (p.len(), Some(Answer::Yes)),
                    _ => (3 + index % 3, None),
                };
                manifest.instances.push(CorpusEntry {
                    file,
                    k,
                    family: Some(family),
                    seed: Some(seed),
                    expected,
                });
                index += 1;
            }
        }
    }
    manifest.save(dir)?;
    Ok(manifest)
}
