//! Persisted polynomial tables, keyed by system, `J`, `x` and family.

use std::path::Path;

use coxkl::{CoxeterSystem, GeneratorSet, IntPolynomial, KlEngine, ParabolicContext, XParam};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::corpus::system_checksum;
use crate::dump::{table, TableKind};
use crate::HarnessError;

pub const CACHE_FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTable {
    pub system_checksum: String,
    /// 1-based generator indices.
    pub j: Vec<usize>,
    pub x: XParam,
    pub kind: TableKind,
    /// `(u, v, polynomial)` with words as comma-separated 1-based indices.
    pub entries: Vec<(String, String, IntPolynomial)>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format_version: u32,
    #[serde(flatten)]
    table: PolyTable,
    content_checksum: String,
}

impl PolyTable {
    pub fn compute(kl: &KlEngine<'_>, ctx: ParabolicContext, kind: TableKind) -> Result<Self, HarnessError> {
        let sys = kl.system();
        let entries = table(kl, ctx, kind)?
            .into_iter()
            .map(|(u, v, p)| (sys.word_string(u), sys.word_string(v), p))
            .collect();
        Ok(PolyTable {
            system_checksum: system_checksum(sys),
            j: ctx.j.iter().map(|s| s + 1).collect(),
            x: ctx.x,
            kind,
            entries,
        })
    }

    pub fn context(&self) -> ParabolicContext {
        ParabolicContext::new(GeneratorSet::from_indices(self.j.iter().map(|s| s - 1)), self.x)
    }

    fn content_checksum(&self) -> String {
        let body = serde_json::to_vec(&self.entries).expect("entries serialize");
        hex::encode(Sha256::digest(&body))
    }
}

pub fn cache_store(path: &Path, table: &PolyTable) -> Result<(), HarnessError> {
    let file = CacheFile {
        format_version: CACHE_FORMAT_VERSION,
        content_checksum: table.content_checksum(),
        table: table.clone(),
    };
    let text = serde_json::to_string(&file).expect("cache serializes");
    std::fs::write(path, text).map_err(|e| HarnessError::io(path, e))
}

/// Loads a table written by [`cache_store`] for the group `sys`.
pub fn cache_load(path: &Path, sys: &CoxeterSystem) -> Result<PolyTable, HarnessError> {
    let text = std::fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| HarnessError::CacheCorrupt(e.to_string()))?;
    let version = value.get("format_version").and_then(serde_json::Value::as_u64);
    if version != Some(u64::from(CACHE_FORMAT_VERSION)) {
        return Err(HarnessError::CacheVersion(format!(
            "format {version:?}, expected {CACHE_FORMAT_VERSION}"
        )));
    }
    let file: CacheFile = serde_json::from_value(value).map_err(|e| HarnessError::CacheCorrupt(e.to_string()))?;
    if file.table.system_checksum != system_checksum(sys) {
        return Err(HarnessError::CacheVersion("table was computed for a different system".into()));
    }
    if file.table.content_checksum() != file.content_checksum {
        return Err(HarnessError::CacheCorrupt("content checksum mismatch".into()));
    }
    Ok(file.table)
}
