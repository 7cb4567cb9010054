//! Verification campaigns, table dumps and caches on top of `coxkl`.

pub mod cache;
pub mod campaign;
pub mod corpus;
pub mod dump;
pub mod identities;
pub mod invariance;
pub mod remark;
pub mod report;
pub mod spec;

use std::path::Path;

pub use campaign::run_campaign;
pub use remark::{reproduce_remark, RemarkRecord};
pub use report::{CampaignReport, CheckReport, Violation};
pub use spec::{CampaignSpec, CheckId, SystemEntry};

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Core(#[from] coxkl::Error),
    #[error("cache version mismatch: {0}")]
    CacheVersion(String),
    #[error("cache corrupted: {0}")]
    CacheCorrupt(String),
    #[error("remark mismatch: {0}")]
    Remark(String),
}

impl HarnessError {
    pub fn io(path: &Path, err: impl std::fmt::Display) -> Self {
        HarnessError::Io { path: path.display().to_string(), message: err.to_string() }
    }
}
