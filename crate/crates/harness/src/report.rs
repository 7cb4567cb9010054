//! Campaign reports: a stable JSON document plus a human summary.

use std::fmt::Write as _;

use coxkl::IntPolynomial;
use serde::{Deserialize, Serialize};

use crate::remark::RemarkRecord;
use crate::spec::CheckId;

pub const SCHEMA_VERSION: u32 = 1;

/// An interval together with a parabolic subset, as words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRef {
    pub system: String,
    pub u: String,
    pub v: String,
    pub j: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub system: String,
    pub u: String,
    pub v: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub detail: String,
    /// The values that should agree, in the order named by `detail`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub polynomials: Vec<IntPolynomial>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partner: Option<InstanceRef>,
    /// The isomorphism as `(source word, target word)` pairs.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub mapping: Vec<(String, String)>,
}

impl Violation {
    pub fn simple(system: &str, u: String, v: String, detail: String) -> Self {
        Violation {
            system: system.to_string(),
            u,
            v,
            j: None,
            x: None,
            family: None,
            detail,
            polynomials: Vec::new(),
            partner: None,
            mapping: Vec::new(),
        }
    }
}

/// Ordered pairs that satisfied a hypothesis, by kind of isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisCount {
    pub kind: String,
    pub pairs: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: CheckId,
    pub examined: u64,
    pub skipped: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub hypotheses: Vec<HypothesisCount>,
    pub violations: Vec<Violation>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(check: CheckId) -> Self {
        CheckReport { check, examined: 0, skipped: 0, hypotheses: Vec::new(), violations: Vec::new(), notes: Vec::new() }
    }

    pub fn absorb(&mut self, other: CheckReport) {
        self.examined += other.examined;
        self.skipped += other.skipped;
        for h in other.hypotheses {
            match self.hypotheses.iter_mut().find(|x| x.kind == h.kind) {
                Some(mine) => mine.pairs += h.pairs,
                None => self.hypotheses.push(h),
            }
        }
        self.violations.extend(other.violations);
        self.notes.extend(other.notes);
    }
}

/// Per-system corpus description with checksums.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub system: String,
    pub elements: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_interval_height: Option<u32>,
    pub comparable_pairs: usize,
    /// sha256 of the group description.
    pub system_checksum: String,
    /// sha256 of the sorted list of comparable pairs.
    pub corpus_checksum: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub schema_version: u32,
    pub campaign: String,
    pub max_interval_size: usize,
    pub corpus: Vec<CorpusEntry>,
    pub checks: Vec<CheckReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub remark: Option<RemarkRecord>,
    pub total_violations: usize,
}

impl CampaignReport {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn check(&self, id: CheckId) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.check == id)
    }

    pub fn has_conjecture_violation(&self) -> bool {
        self.checks.iter().any(|c| c.check.is_conjecture() && !c.violations.is_empty())
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        let name = if self.campaign.is_empty() { "campaign" } else { &self.campaign };
        let _ = writeln!(out, "{name}: {} systems", self.corpus.len());
        for c in &self.corpus {
            let bound = c.max_interval_height.map_or("all".to_string(), |h| format!("height <= {h}"));
            let _ = writeln!(
                out,
                "  {:<12} {:>7} elements, {:>8} comparable pairs ({bound})",
                c.system, c.elements, c.comparable_pairs
            );
        }
        for c in &self.checks {
            let status = if c.violations.is_empty() { "ok" } else { "VIOLATED" };
            let _ = write!(
                out,
                "  {:<24} {:<8} examined {:>9}  skipped {:>6}  violations {}",
                c.check.name(),
                status,
                c.examined,
                c.skipped,
                c.violations.len()
            );
            for h in &c.hypotheses {
                let _ = write!(out, "  {}: {}", h.kind, h.pairs);
            }
            out.push('\n');
            for note in &c.notes {
                let _ = writeln!(out, "      note: {note}");
            }
        }
        if self.has_conjecture_violation() {
            let _ = writeln!(out);
            let _ = writeln!(out, "!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!");
            let _ = writeln!(out, "!!  CONJECTURE VIOLATED: possible disproof or bug.            !!");
            let _ = writeln!(out, "!!  Full witnesses are in the machine-readable report.        !!");
            let _ = writeln!(out, "!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!");
        }
        let _ = writeln!(out, "total violations: {}", self.total_violations);
        out
    }
}
