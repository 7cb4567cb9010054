use crate::bruhat::{non_dominated_local, BruhatInterval};
use crate::coxeter::{Backend, CoxeterSystem, GeneratorSet};
use crate::error::{Error, Result};

use super::fingerprint::poset_fingerprint;
use super::iso::{find_isomorphisms, Constraint, IsoWitness};

/// Local indices of the atoms lying in `W^J`.
pub fn atoms_in_quotient_local(interval: &BruhatInterval, j: GeneratorSet) -> Vec<usize> {
    interval.atoms().iter().copied().filter(|&a| interval.in_quotient(a, j)).collect()
}

/// Whether the witness carries the non-dominated set of the source onto that
/// of the target.
pub fn check_nondominated_transport(
    source: &BruhatInterval,
    target: &BruhatInterval,
    witness: &IsoWitness,
) -> Result<bool> {
    if !witness.respects_atoms {
        return Err(Error::Precondition("witness does not respect atoms".into()));
    }
    let n1 = non_dominated_local(source.poset(), &atoms_in_quotient_local(source, witness.j1));
    let n2 = non_dominated_local(target.poset(), &atoms_in_quotient_local(target, witness.j2));
    let mut image: Vec<usize> = n1.iter().map(|&i| witness.mapping[i]).collect();
    image.sort_unstable();
    Ok(image == n2)
}

pub fn is_lower_interval(interval: &BruhatInterval) -> bool {
    interval.is_lower()
}

/// Whether every Bruhat-graph edge inside the interval joins adjacent ranks.
pub fn is_short_edge(interval: &BruhatInterval) -> Result<bool> {
    let edges = interval.bruhat_edges().ok_or(Error::GraphAbsent)?;
    let poset = interval.poset();
    Ok(edges.iter().all(|e| poset.rank(e.upper) == poset.rank(e.lower) + 1))
}

/// Transpositions `(i j)`, 1-based with `i < j`, such that `v·(i j)` is a
/// coatom of the interval.
pub fn coatom_transpositions(sys: &CoxeterSystem, interval: &BruhatInterval) -> Result<Vec<(usize, usize)>> {
    if sys.backend() != Backend::Permutation {
        return Err(Error::NotTypeA);
    }
    let top = interval.len() - 1;
    let pv = sys.permutation(interval.top()).ok_or(Error::NotTypeA)?;
    let mut out = Vec::new();
    for &c in interval.poset().down(top) {
        let pc = sys.permutation(interval.element(c)).ok_or(Error::NotTypeA)?;
        let diff: Vec<usize> = (0..pv.len()).filter(|&k| pv[k] != pc[k]).collect();
        match diff[..] {
            [i, j] => out.push((i + 1, j + 1)),
            _ => return Err(Error::Inconsistent("coatom is not a transposition of the top".into())),
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Whether the vectors `e_i - e_j` of the coatom transpositions are linearly
/// independent, i.e. the transpositions form a forest on the points.
pub fn is_cosimple(sys: &CoxeterSystem, interval: &BruhatInterval) -> Result<bool> {
    let edges = coatom_transpositions(sys, interval)?;
    let mut parent: Vec<usize> = (0..=sys.rank() + 1).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, j) in edges {
        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
        if a == b {
            return Ok(false);
        }
        parent[a] = b;
    }
    Ok(true)
}

/// Whether some cosimple interval of `corpus` is isomorphic to `interval`.
/// This only decides coelementarity relative to the given corpus.
pub fn is_corpus_coelementary(
    interval: &BruhatInterval,
    corpus: &[(&CoxeterSystem, &BruhatInterval)],
) -> Result<bool> {
    let fp = poset_fingerprint(interval.poset());
    for &(sys, candidate) in corpus {
        if poset_fingerprint(candidate.poset()) != fp || !is_cosimple(sys, candidate)? {
            continue;
        }
        if !find_isomorphisms(interval, candidate, Constraint::None, 1)?.is_empty() {
            return Ok(true);
        }
    }
    Ok(false)
}
