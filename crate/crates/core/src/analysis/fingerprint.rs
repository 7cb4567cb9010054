use serde::Serialize;

use crate::bruhat::{BruhatInterval, GradedPoset};

/// Isomorphism-invariant summary of a graded poset. Equal fingerprints are
/// necessary for isomorphism, never sufficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Fingerprint {
    pub size: usize,
    pub rank_vector: Vec<usize>,
    pub atoms: usize,
    pub coatoms: usize,
    /// Per rank, the sorted `(down-degree, up-degree)` pairs.
    pub degree_profile: Vec<Vec<(usize, usize)>>,
    /// Counts of Bruhat-graph edges by length gap, index `g - 1` for gap `g`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_gaps: Option<Vec<usize>>,
}

impl Fingerprint {
    /// The part determined by the order relation alone.
    pub fn poset_part(&self) -> Fingerprint {
        Fingerprint { edge_gaps: None, ..self.clone() }
    }
}

pub fn poset_fingerprint(poset: &GradedPoset) -> Fingerprint {
    let height = poset.height() as usize;
    let mut rank_vector = vec![0; height + 1];
    let mut degree_profile = vec![Vec::new(); height + 1];
    for i in 0..poset.len() {
        let r = poset.rank(i) as usize;
        rank_vector[r] += 1;
        degree_profile[r].push((poset.down(i).len(), poset.up(i).len()));
    }
    for level in &mut degree_profile {
        level.sort_unstable();
    }
    let (atoms, coatoms) = if poset.len() <= 1 {
        (0, 0)
    } else {
        (rank_vector[1], rank_vector[height - 1])
    };
    Fingerprint {
        size: poset.len(),
        rank_vector,
        atoms,
        coatoms,
        degree_profile,
        edge_gaps: None,
    }
}

/// Fingerprint of an interval; the edge-gap multiset is included when the
/// interval carries its Bruhat graph.
pub fn fingerprint(interval: &BruhatInterval) -> Fingerprint {
    let mut fp = poset_fingerprint(interval.poset());
    if let Some(edges) = interval.bruhat_edges() {
        let poset = interval.poset();
        let mut gaps = vec![0; poset.height() as usize];
        for e in edges {
            let g = (poset.rank(e.upper) - poset.rank(e.lower)) as usize;
            gaps[g - 1] += 1;
        }
        fp.edge_gaps = Some(gaps);
    }
    fp
}
