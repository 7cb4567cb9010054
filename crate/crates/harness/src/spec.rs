//! Campaign files.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use coxkl::coxeter::MatrixRows;
use coxkl::SystemDescription;
use serde::{Deserialize, Serialize};

use crate::HarnessError;

/// One verification check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckId {
    /// Projection to `W^J` is order preserving.
    QuotientMonotonicity,
    /// `uW_J ∩ [e,v]` equals the set of elements above no atom in `W^J`.
    CosetSlice,
    /// Parabolic R and P agree with their Deodhar sums.
    DeodharSums,
    /// Computed families satisfy their defining conditions.
    KlDefinitionAudit,
    /// `R_{u,v} = R_{w0 v, w0 u}`.
    W0Duality,
    /// x-independence at `J = ∅` and classical shape of `R` and `P`.
    OrdinarySanity,
    /// Isomorphic intervals have equal `R` and `P`.
    CicOrdinary,
    /// Quotient-respecting isomorphisms preserve `R^{J,x}` and `P^{J,x}`.
    CicParabolicQuotient,
    /// Atom-respecting isomorphisms preserve `R^{J,x}` and `P^{J,q}`.
    CicParabolicAtoms,
    /// The invariance statements restricted to lower intervals.
    LowerIntervals,
    /// The invariance statements with a short-edge source interval.
    ShortEdgeIntervals,
    /// The R-statements for coelementary intervals in symmetric groups.
    CoelementaryIntervals,
    /// The S4 example where the atom statement fails for `P^{J,-1}`.
    BooleanCounterexample,
}

impl CheckId {
    pub const ALL: [CheckId; 13] = [
        CheckId::QuotientMonotonicity,
        CheckId::CosetSlice,
        CheckId::DeodharSums,
        CheckId::KlDefinitionAudit,
        CheckId::W0Duality,
        CheckId::OrdinarySanity,
        CheckId::CicOrdinary,
        CheckId::CicParabolicQuotient,
        CheckId::CicParabolicAtoms,
        CheckId::LowerIntervals,
        CheckId::ShortEdgeIntervals,
        CheckId::CoelementaryIntervals,
        CheckId::BooleanCounterexample,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::QuotientMonotonicity => "quotient-monotonicity",
            CheckId::CosetSlice => "coset-slice",
            CheckId::DeodharSums => "deodhar-sums",
            CheckId::KlDefinitionAudit => "kl-definition-audit",
            CheckId::W0Duality => "w0-duality",
            CheckId::OrdinarySanity => "ordinary-sanity",
            CheckId::CicOrdinary => "cic-ordinary",
            CheckId::CicParabolicQuotient => "cic-parabolic-quotient",
            CheckId::CicParabolicAtoms => "cic-parabolic-atoms",
            CheckId::LowerIntervals => "lower-intervals",
            CheckId::ShortEdgeIntervals => "short-edge-intervals",
            CheckId::CoelementaryIntervals => "coelementary-intervals",
            CheckId::BooleanCounterexample => "boolean-counterexample",
        }
    }

    /// Conjectural statements; a violation there is a possible disproof.
    pub fn is_conjecture(self) -> bool {
        matches!(self, CheckId::CicOrdinary | CheckId::CicParabolicQuotient | CheckId::CicParabolicAtoms)
    }

    /// Checks that compare intervals across the whole corpus.
    pub fn is_invariance(self) -> bool {
        self.is_conjecture()
            || matches!(
                self,
                CheckId::LowerIntervals | CheckId::ShortEdgeIntervals | CheckId::CoelementaryIntervals
            )
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| HarnessError::Config(format!("unknown check `{s}`")))
    }
}

/// A corpus system with optional per-system bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemEntry {
    #[serde(rename = "type")]
    pub type_name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<MatrixRows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub length_cap: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub backend: Option<String>,
    /// Name used in reports; defaults to the type name.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    /// Overrides the campaign-wide height bound for this system.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_interval_height: Option<u32>,
}

impl SystemEntry {
    pub fn named(type_name: &str) -> Self {
        SystemEntry {
            type_name: type_name.to_string(),
            matrix: None,
            length_cap: None,
            backend: None,
            label: None,
            max_interval_height: None,
        }
    }

    pub fn with_height(mut self, h: u32) -> Self {
        self.max_interval_height = Some(h);
        self
    }

    pub fn description(&self) -> SystemDescription {
        SystemDescription {
            type_name: self.type_name.clone(),
            matrix: self.matrix.clone(),
            length_cap: self.length_cap,
            backend: self.backend.clone(),
        }
    }

    pub fn label(&self) -> String {
        self.label.clone().unwrap_or_else(|| self.type_name.clone())
    }
}

fn default_height() -> u32 {
    u32::MAX
}

fn default_size() -> usize {
    coxkl::bruhat::DEFAULT_INTERVAL_CAP
}

fn default_parallelism() -> usize {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CampaignSpec {
    #[serde(default)]
    pub name: String,
    pub systems: Vec<SystemEntry>,
    /// Bound on `ℓ(v) - ℓ(u)`.
    #[serde(default = "default_height")]
    pub max_interval_height: u32,
    /// Intervals with more elements are skipped.
    #[serde(default = "default_size")]
    pub max_interval_size: usize,
    pub checks: Vec<CheckId>,
    #[serde(default = "default_parallelism")]
    pub parallelism: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_path: Option<PathBuf>,
}

impl CampaignSpec {
    pub fn new(systems: Vec<SystemEntry>, checks: Vec<CheckId>) -> Self {
        CampaignSpec {
            name: String::new(),
            systems,
            max_interval_height: default_height(),
            max_interval_size: default_size(),
            checks,
            parallelism: default_parallelism(),
            output_path: None,
        }
    }

    pub fn parse(text: &str) -> Result<Self, HarnessError> {
        let spec: CampaignSpec = toml::from_str(text).map_err(|e| HarnessError::Config(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn load(path: &Path) -> Result<Self, HarnessError> {
        let text = std::fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
        let mut spec = Self::parse(&text)?;
        if let Some(out) = &spec.output_path {
            if out.is_relative() {
                if let Some(dir) = path.parent() {
                    spec.output_path = Some(dir.join(out));
                }
            }
        }
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        let bad = |m: &str| Err(HarnessError::Config(m.to_string()));
        if self.systems.is_empty() {
            return bad("no systems");
        }
        if self.checks.is_empty() {
            return bad("no checks");
        }
        if self.max_interval_height == 0 || self.max_interval_size == 0 || self.parallelism == 0 {
            return bad("bounds must be positive");
        }
        if self.systems.iter().any(|s| s.max_interval_height == Some(0)) {
            return bad("bounds must be positive");
        }
        let mut labels: Vec<String> = self.systems.iter().map(SystemEntry::label).collect();
        labels.sort();
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return bad("system labels must be unique");
        }
        Ok(())
    }

    pub fn height_bound(&self, entry: &SystemEntry) -> u32 {
        entry.max_interval_height.unwrap_or(self.max_interval_height).min(self.max_interval_height)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_campaign() {
        let spec = CampaignSpec::parse(
            r#"
            name = "t"
            checks = ["deodhar-sums", "lower-intervals"]
            max_interval_height = 4
            [[systems]]
            type = "A3"
            [[systems]]
            type = "matrix"
            label = "affine-A2"
            matrix = [[1, 3, 3], [3, 1, 3], [3, 3, 1]]
            length_cap = 5
            "#,
        )
        .unwrap();
        assert_eq!(spec.checks, vec![CheckId::DeodharSums, CheckId::LowerIntervals]);
        assert_eq!(spec.systems[1].label(), "affine-A2");
        assert_eq!(spec.height_bound(&spec.systems[0]), 4);
        assert_eq!(spec.max_interval_size, 512);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(CampaignSpec::parse("checks = []\n[[systems]]\ntype = \"A2\"").is_err());
        assert!(CampaignSpec::parse("checks = [\"nope\"]\n[[systems]]\ntype = \"A2\"").is_err());
        assert!(CampaignSpec::parse("checks = [\"w0-duality\"]\nsystems = []").is_err());
        assert!(CampaignSpec::parse(
            "checks = [\"w0-duality\"]\nmax_interval_height = 0\n[[systems]]\ntype = \"A2\""
        )
        .is_err());
        assert!(CampaignSpec::parse(
            "checks = [\"w0-duality\"]\n[[systems]]\ntype = \"A2\"\n[[systems]]\ntype = \"A2\""
        )
        .is_err());
    }

    #[test]
    fn check_names_round_trip() {
        for c in CheckId::ALL {
            assert_eq!(c.name().parse::<CheckId>().unwrap(), c);
            assert_eq!(serde_json::to_string(&c).unwrap(), format!("\"{}\"", c.name()));
        }
    }
}
