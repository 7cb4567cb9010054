//! Order-isomorphism search between graded posets.
//!
//! Elements are refined by iterated colour refinement over the Hasse diagram
//! (seeded with rank, degrees and an optional constraint colour), then matched
//! rank by rank with backtracking. Candidates are tried in increasing index
//! order, so witnesses come out in lexicographic order of the mapping.

use std::collections::BTreeMap;

use crate::bruhat::{BruhatInterval, GradedPoset};
use crate::coxeter::{Element, GeneratorSet};
use crate::error::{Error, Result};

/// Largest interval accepted by the search.
pub const SEARCH_SIZE_CAP: usize = 1 << 16;

/// Side condition imposed on an isomorphism `[u1,v1] → [u2,v2]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Constraint {
    None,
    /// Must map `A^{J1}_{u1,v1}` onto `A^{J2}_{u2,v2}`.
    AtomBijection { j1: GeneratorSet, j2: GeneratorSet },
    /// Must restrict to a bijection `[u1,v1]^{J1} → [u2,v2]^{J2}`.
    QuotientIso { j1: GeneratorSet, j2: GeneratorSet },
}

impl Constraint {
    fn sets(self) -> (GeneratorSet, GeneratorSet) {
        match self {
            Constraint::None => (GeneratorSet::EMPTY, GeneratorSet::EMPTY),
            Constraint::AtomBijection { j1, j2 } | Constraint::QuotientIso { j1, j2 } => (j1, j2),
        }
    }
}

/// An order isomorphism between two intervals, as local indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    /// `mapping[i]` is the image of source index `i`.
    pub mapping: Vec<usize>,
    pub j1: GeneratorSet,
    pub j2: GeneratorSet,
    /// Maps the atoms in `W^{J1}` onto the atoms in `W^{J2}`.
    pub respects_atoms: bool,
    /// Maps `[u1,v1]^{J1}` onto `[u2,v2]^{J2}`.
    pub respects_quotient: bool,
}

impl IsoWitness {
    pub fn new(
        source: &BruhatInterval,
        target: &BruhatInterval,
        mapping: Vec<usize>,
        j1: GeneratorSet,
        j2: GeneratorSet,
    ) -> Self {
        let respects_atoms = source.atoms().iter().all(|&a| {
            source.in_quotient(a, j1) == target.in_quotient(mapping[a], j2)
        });
        let respects_quotient = (0..source.len())
            .all(|i| source.in_quotient(i, j1) == target.in_quotient(mapping[i], j2));
        IsoWitness { mapping, j1, j2, respects_atoms, respects_quotient }
    }

    /// The mapping as explicit element pairs.
    pub fn pairs(&self, source: &BruhatInterval, target: &BruhatInterval) -> Vec<(Element, Element)> {
        self.mapping
            .iter()
            .enumerate()
            .map(|(i, &t)| (source.element(i), target.element(t)))
            .collect()
    }

    /// Re-checks on every pair that the mapping is a bijection preserving
    /// and reflecting the order.
    pub fn is_order_isomorphism(&self, source: &GradedPoset, target: &GradedPoset) -> bool {
        is_order_isomorphism(&self.mapping, source, target)
    }
}

/// Brute-force check of a candidate mapping against both order relations.
pub fn is_order_isomorphism(mapping: &[usize], source: &GradedPoset, target: &GradedPoset) -> bool {
    let n = source.len();
    if target.len() != n || mapping.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &t in mapping {
        if t >= n || hit[t] {
            return false;
        }
        hit[t] = true;
    }
    let (o1, o2) = (source.order_matrix(), target.order_matrix());
    (0..n).all(|a| (0..n).all(|b| o1[a][b] == o2[mapping[a]][mapping[b]]))
}

fn constraint_colours(interval: &BruhatInterval, constraint: Constraint, first: bool) -> Vec<u32> {
    let (j1, j2) = constraint.sets();
    let j = if first { j1 } else { j2 };
    let mut colours = vec![0; interval.len()];
    match constraint {
        Constraint::None => {}
        Constraint::AtomBijection { .. } => {
            for &a in interval.atoms() {
                colours[a] = u32::from(interval.in_quotient(a, j));
            }
        }
        Constraint::QuotientIso { .. } => {
            for (i, c) in colours.iter_mut().enumerate() {
                *c = u32::from(interval.in_quotient(i, j));
            }
        }
    }
    colours
}

/// Up to `limit` isomorphisms `source → target` satisfying `constraint`. All
/// of them are returned when fewer than `limit` exist.
pub fn find_isomorphisms(
    source: &BruhatInterval,
    target: &BruhatInterval,
    constraint: Constraint,
    limit: usize,
) -> Result<Vec<IsoWitness>> {
    if source.len() > SEARCH_SIZE_CAP || target.len() > SEARCH_SIZE_CAP {
        return Err(Error::IntervalTooLarge { cap: SEARCH_SIZE_CAP });
    }
    let c1 = constraint_colours(source, constraint, true);
    let c2 = constraint_colours(target, constraint, false);
    let (j1, j2) = constraint.sets();
    Ok(poset_isomorphisms(source.poset(), &c1, target.poset(), &c2, limit)
        .into_iter()
        .map(|m| IsoWitness::new(source, target, m, j1, j2))
        .collect())
}

/// Up to `limit` colour-preserving order isomorphisms between two graded
/// posets, in lexicographic order of the mapping.
pub fn poset_isomorphisms(
    p1: &GradedPoset,
    c1: &[u32],
    p2: &GradedPoset,
    c2: &[u32],
    limit: usize,
) -> Vec<Vec<usize>> {
    if p1.len() != p2.len() || limit == 0 {
        return Vec::new();
    }
    let Some((r1, r2)) = refine(p1, c1, p2, c2) else {
        return Vec::new();
    };
    let mut order: Vec<usize> = (0..p1.len()).collect();
    order.sort_by_key(|&i| (p1.rank(i), i));
    let mut candidates: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (t, &c) in r2.iter().enumerate() {
        candidates.entry(c).or_default().push(t);
    }
    let mut search = Search {
        p1,
        p2,
        r1: &r1,
        candidates: &candidates,
        order: &order,
        mapping: vec![usize::MAX; p1.len()],
        used: vec![false; p1.len()],
        found: Vec::new(),
        limit,
    };
    search.run(0);
    search.found
}

/// Joint colour refinement. Returns `None` when the colour histograms of the
/// two posets diverge, which rules out any isomorphism.
fn refine(p1: &GradedPoset, c1: &[u32], p2: &GradedPoset, c2: &[u32]) -> Option<(Vec<u32>, Vec<u32>)> {
    let seed = |p: &GradedPoset, c: &[u32], i: usize| {
        (c[i], vec![p.rank(i)], vec![p.down(i).len() as u32, p.up(i).len() as u32])
    };
    let mut s1: Vec<_> = (0..p1.len()).map(|i| seed(p1, c1, i)).collect();
    let mut s2: Vec<_> = (0..p2.len()).map(|i| seed(p2, c2, i)).collect();
    let mut classes = 0;
    loop {
        let mut ids: BTreeMap<&(u32, Vec<u32>, Vec<u32>), u32> = BTreeMap::new();
        for s in s1.iter().chain(&s2) {
            ids.entry(s).or_insert(0);
        }
        for (n, v) in ids.values_mut().enumerate() {
            *v = n as u32;
        }
        let k1: Vec<u32> = s1.iter().map(|s| ids[s]).collect();
        let k2: Vec<u32> = s2.iter().map(|s| ids[s]).collect();
        let mut h1 = k1.clone();
        let mut h2 = k2.clone();
        h1.sort_unstable();
        h2.sort_unstable();
        if h1 != h2 {
            return None;
        }
        if ids.len() == classes {
            return Some((k1, k2));
        }
        classes = ids.len();
        let step = |p: &GradedPoset, k: &[u32], i: usize| {
            let mut down: Vec<u32> = p.down(i).iter().map(|&d| k[d]).collect();
            let mut up: Vec<u32> = p.up(i).iter().map(|&d| k[d]).collect();
            down.sort_unstable();
            up.sort_unstable();
            down.push(u32::MAX);
            down.extend(up);
            (k[i], down, Vec::new())
        };
        s1 = (0..p1.len()).map(|i| step(p1, &k1, i)).collect();
        s2 = (0..p2.len()).map(|i| step(p2, &k2, i)).collect();
    }
}

struct Search<'a> {
    p1: &'a GradedPoset,
    p2: &'a GradedPoset,
    r1: &'a [u32],
    candidates: &'a BTreeMap<u32, Vec<usize>>,
    order: &'a [usize],
    mapping: Vec<usize>,
    used: Vec<bool>,
    found: Vec<Vec<usize>>,
    limit: usize,
}

impl Search<'_> {
    fn run(&mut self, pos: usize) {
        if pos == self.order.len() {
            self.found.push(self.mapping.clone());
            return;
        }
        let i = self.order[pos];
        let Some(cands) = self.candidates.get(&self.r1[i]) else { return };
        for &t in cands {
            if self.used[t] {
                continue;
            }
            // Down-neighbours have lower rank and are already placed; with
            // equal degrees, mapping them into down(t) makes the Hasse
            // diagrams correspond exactly.
            let ok = self.p1.down(i).iter().all(|&d| self.p2.down(t).binary_search(&self.mapping[d]).is_ok());
            if !ok {
                continue;
            }
            self.mapping[i] = t;
            self.used[t] = true;
            self.run(pos + 1);
            self.used[t] = false;
            self.mapping[i] = usize::MAX;
            if self.found.len() >= self.limit {
                return;
            }
        }
    }
}
