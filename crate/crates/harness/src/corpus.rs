//! Corpus systems and their comparable pairs.

use coxkl::bruhat::bruhat_leq;
use coxkl::{Backend, CoxeterSystem, Element};
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::report::CorpusEntry;
use crate::spec::{CampaignSpec, SystemEntry};
use crate::HarnessError;

pub struct CorpusSystem {
    pub label: String,
    pub sys: CoxeterSystem,
    /// `None` when every comparable pair is included.
    pub height: Option<u32>,
    /// Comparable pairs `(u, v)` within the height bound, ordered by `(v, u)`.
    pub pairs: Vec<(Element, Element)>,
}

impl CorpusSystem {
    pub fn build(entry: &SystemEntry, spec: &CampaignSpec) -> Result<Self, HarnessError> {
        let sys = CoxeterSystem::build(&entry.description())?;
        let bound = spec.height_bound(entry);
        let height = (bound < sys.max_length()).then_some(bound);
        let pairs = comparable_pairs(&sys, height);
        Ok(CorpusSystem { label: entry.label(), sys, height, pairs })
    }

    pub fn is_type_a(&self) -> bool {
        self.sys.backend() == Backend::Permutation
    }

    pub fn within_height(&self, u: Element, v: Element) -> bool {
        let (lu, lv) = (self.sys.length(u), self.sys.length(v));
        lu <= lv && self.height.is_none_or(|h| lv - lu <= h)
    }

    pub fn entry(&self) -> CorpusEntry {
        let mut corpus = Sha256::new();
        for &(u, v) in &self.pairs {
            corpus.update(self.sys.word_string(u).as_bytes());
            corpus.update(b"<=");
            corpus.update(self.sys.word_string(v).as_bytes());
            corpus.update(b"\n");
        }
        CorpusEntry {
            system: self.label.clone(),
            elements: self.sys.len(),
            max_interval_height: self.height,
            comparable_pairs: self.pairs.len(),
            system_checksum: system_checksum(&self.sys),
            corpus_checksum: hex::encode(corpus.finalize()),
        }
    }
}

pub fn system_checksum(sys: &CoxeterSystem) -> String {
    hex::encode(Sha256::digest(sys.fingerprint_text().as_bytes()))
}

/// Pairs `u ≤ v` with `ℓ(v) - ℓ(u)` at most `height`, ordered by `(v, u)`.
pub fn comparable_pairs(sys: &CoxeterSystem, height: Option<u32>) -> Vec<(Element, Element)> {
    let tops: Vec<Element> = sys.elements().collect();
    tops.par_iter()
        .map(|&v| {
            let lv = sys.length(v);
            let floor = height.map_or(0, |h| lv.saturating_sub(h));
            (floor..=lv)
                .flat_map(|len| sys.elements_of_length(len))
                .filter(|&u| bruhat_leq(sys, u, v))
                .map(|u| (u, v))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flat_map(|mut column| {
            column.sort_unstable();
            column
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_counts() {
        let a2 = CoxeterSystem::named("A2").unwrap();
        let all = comparable_pairs(&a2, None);
        let brute = a2
            .elements()
            .flat_map(|v| a2.elements().map(move |u| (u, v)))
            .filter(|&(u, v)| bruhat_leq(&a2, u, v))
            .count();
        assert_eq!(all.len(), brute);
        assert_eq!(all.len(), 19);
        assert_eq!(comparable_pairs(&a2, Some(0)).len(), 6);
        assert_eq!(comparable_pairs(&a2, Some(1)).len(), 6 + 8);
    }
}
