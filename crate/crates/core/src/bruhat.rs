//! Bruhat order: comparison, intervals, Bruhat-graph edges and quotient data.

use std::collections::{HashMap, HashSet};

use crate::coxeter::{Backend, CoxeterSystem, Element, GeneratorSet, Side};
use crate::error::{Error, Result};

/// Default cap on materialized interval size.
pub const DEFAULT_INTERVAL_CAP: usize = 512;

/// `u ≤ v` in Bruhat order. Uses the tableau criterion for permutation
/// backends and the lifting recursion otherwise.
pub fn bruhat_leq(sys: &CoxeterSystem, u: Element, v: Element) -> bool {
    if let Some(r) = bruhat_leq_tableau(sys, u, v) {
        return r;
    }
    bruhat_leq_lifting(sys, u, v)
}

/// Lifting-property recursion: for `s` a right descent of `v`, `u ≤ v` iff
/// `us ≤ vs` when `s` is also a descent of `u`, and iff `u ≤ vs` otherwise.
pub fn bruhat_leq_lifting(sys: &CoxeterSystem, mut u: Element, mut v: Element) -> bool {
    loop {
        if u == sys.identity() {
            return true;
        }
        let (lu, lv) = (sys.length(u), sys.length(v));
        if lu >= lv {
            return u == v;
        }
        let s = sys.right_descents(v).first().expect("v is not the identity");
        let down = |w| sys.try_mul_gen(w, s, Side::Right).expect("descent stays in the table");
        if sys.right_descents(u).contains(s) {
            u = down(u);
        }
        v = down(v);
    }
}

/// Tableau criterion on one-line notation; `None` unless the system uses the
/// permutation backend.
pub fn bruhat_leq_tableau(sys: &CoxeterSystem, u: Element, v: Element) -> Option<bool> {
    if sys.backend() != Backend::Permutation {
        return None;
    }
    let (pu, pv) = (sys.permutation(u)?, sys.permutation(v)?);
    let n = pu.len();
    // cu[k] = #{a <= i : u(a) >= k}
    let mut cu = vec![0i32; n + 1];
    let mut cv = vec![0i32; n + 1];
    for i in 0..n {
        for c in &mut cu[1..=pu[i] as usize] {
            *c += 1;
        }
        for c in &mut cv[1..=pv[i] as usize] {
            *c += 1;
        }
        if (1..=n).any(|k| cu[k] > cv[k]) {
            return Some(false);
        }
    }
    Some(true)
}

/// Elements obtained by deleting one letter from the canonical word of `v`,
/// paired with the deleted position. These are exactly the `v·t` with `t` a
/// reflection and `ℓ(vt) < ℓ(v)`.
pub fn deletions(sys: &CoxeterSystem, v: Element) -> Vec<(Element, usize)> {
    let word = sys.word(v);
    let mut prefix = sys.identity();
    let mut out = Vec::with_capacity(word.len());
    for i in 0..word.len() {
        let mut z = prefix;
        for &s in &word[i + 1..] {
            z = sys.try_mul_gen(z, s as usize, Side::Right).expect("subword stays in the table");
        }
        out.push((z, i));
        prefix = sys.try_mul_gen(prefix, word[i] as usize, Side::Right).expect("prefix of v");
    }
    out
}

/// The reflection `t` with `v·t` equal to the deletion at `position`, when it
/// lies inside the enumerated range.
pub fn deletion_reflection(sys: &CoxeterSystem, v: Element, position: usize) -> Option<Element> {
    let word = sys.word(v);
    let tail = &word[position + 1..];
    let mut letters = tail.iter().rev().chain(std::iter::once(&word[position])).chain(tail.iter());
    letters.try_fold(sys.identity(), |w, &s| sys.try_mul_gen(w, s as usize, Side::Right))
}

/// All `y` with `y ⋖ v`, in id order.
pub fn covers_down(sys: &CoxeterSystem, v: Element) -> Vec<Element> {
    let target = sys.length(v).saturating_sub(1);
    let mut out: Vec<Element> = deletions(sys, v)
        .into_iter()
        .filter(|&(y, _)| sys.length(y) == target)
        .map(|(y, _)| y)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// A finite graded poset given by its Hasse diagram. Element `i` has rank
/// `rank[i]`; `down[i]` and `up[i]` list covered and covering elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPoset {
    rank: Vec<u32>,
    down: Vec<Vec<usize>>,
    up: Vec<Vec<usize>>,
}

impl GradedPoset {
    pub fn from_covers(rank: Vec<u32>, mut down: Vec<Vec<usize>>) -> Self {
        let mut up = vec![Vec::new(); rank.len()];
        for (i, ds) in down.iter_mut().enumerate() {
            ds.sort_unstable();
            for &d in ds.iter() {
                up[d].push(i);
            }
        }
        for us in &mut up {
            us.sort_unstable();
        }
        GradedPoset { rank, down, up }
    }

    /// Subsets of an `n`-set, ordered by size then bitmask.
    pub fn boolean_lattice(n: usize) -> Self {
        let mut subsets: Vec<u32> = (0..1u32 << n).collect();
        subsets.sort_by_key(|&m| (m.count_ones(), m));
        let pos: HashMap<u32, usize> = subsets.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let rank = subsets.iter().map(|m| m.count_ones()).collect();
        let down = subsets
            .iter()
            .map(|&m| (0..n).filter(|b| m & (1 << b) != 0).map(|b| pos[&(m & !(1 << b))]).collect())
            .collect();
        Self::from_covers(rank, down)
    }

    /// A chain with `height + 1` elements.
    pub fn chain(height: usize) -> Self {
        let rank = (0..=height as u32).collect();
        let down = (0..=height).map(|i| if i == 0 { vec![] } else { vec![i - 1] }).collect();
        Self::from_covers(rank, down)
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn rank(&self, i: usize) -> u32 {
        self.rank[i]
    }

    pub fn ranks(&self) -> &[u32] {
        &self.rank
    }

    pub fn down(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    pub fn up(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    pub fn height(&self) -> u32 {
        self.rank.iter().copied().max().unwrap_or(0)
    }

    /// Marks every element lying above some seed (seeds included).
    pub fn up_closure(&self, seeds: &[usize]) -> Vec<bool> {
        let mut mark = vec![false; self.len()];
        let mut stack: Vec<usize> = seeds.to_vec();
        while let Some(i) = stack.pop() {
            if !mark[i] {
                mark[i] = true;
                stack.extend_from_slice(&self.up[i]);
            }
        }
        mark
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        if self.rank[a] > self.rank[b] {
            return false;
        }
        let mut seen = vec![false; self.len()];
        let mut stack = vec![b];
        while let Some(i) = stack.pop() {
            if i == a {
                return true;
            }
            for &d in &self.down[i] {
                if !seen[d] && self.rank[d] >= self.rank[a] {
                    seen[d] = true;
                    stack.push(d);
                }
            }
        }
        false
    }

    /// `order[i][j]` is true iff `i ≤ j`.
    pub fn order_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.len()).map(|i| self.up_closure(&[i])).collect()
    }

    /// Indices of the minimal elements.
    pub fn minima(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.down[i].is_empty()).collect()
    }
}

/// One Bruhat-graph edge `lower → upper` inside an interval, with
/// `upper = lower · reflection`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruhatEdge {
    pub lower: usize,
    pub upper: usize,
    /// `None` when the reflection lies beyond the length cap.
    pub reflection: Option<Element>,
}

/// The closed interval `[u, v]`, materialized with its Hasse diagram.
/// Local indices follow element id order, so `0` is the bottom and the last
/// index is the top.
#[derive(Clone, Debug)]
pub struct BruhatInterval {
    bottom: Element,
    top: Element,
    elements: Vec<Element>,
    index: HashMap<Element, usize>,
    poset: GradedPoset,
    descents: Vec<GeneratorSet>,
    lower: bool,
    edges: Option<Vec<BruhatEdge>>,
}

impl BruhatInterval {
    pub fn bottom(&self) -> Element {
        self.bottom
    }

    pub fn top(&self) -> Element {
        self.top
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn height(&self) -> u32 {
        self.poset.height()
    }

    pub fn poset(&self) -> &GradedPoset {
        &self.poset
    }

    pub fn local_index(&self, w: Element) -> Option<usize> {
        self.index.get(&w).copied()
    }

    pub fn contains(&self, w: Element) -> bool {
        self.index.contains_key(&w)
    }

    pub fn element(&self, i: usize) -> Element {
        self.elements[i]
    }

    /// `ℓ(y) - ℓ(u)`.
    pub fn rank_of(&self, w: Element) -> Option<u32> {
        self.local_index(w).map(|i| self.poset.rank(i))
    }

    /// Right descent set of the element at local index `i`.
    pub fn descents(&self, i: usize) -> GeneratorSet {
        self.descents[i]
    }

    pub fn in_quotient(&self, i: usize, j: GeneratorSet) -> bool {
        self.descents[i].is_disjoint(j)
    }

    /// Whether the bottom is the group identity.
    pub fn is_lower(&self) -> bool {
        self.lower
    }

    /// Cover pairs `(y, y')` with `y ⋖ y'`, as elements.
    pub fn covers(&self) -> Vec<(Element, Element)> {
        (0..self.len())
            .flat_map(|i| self.poset.down(i).iter().map(move |&d| (self.elements[d], self.elements[i])))
            .collect()
    }

    pub fn atoms(&self) -> &[usize] {
        if self.len() == 1 {
            &[]
        } else {
            self.poset.up(0)
        }
    }

    pub fn bruhat_edges(&self) -> Option<&[BruhatEdge]> {
        self.edges.as_deref()
    }
}

pub fn build_interval(
    sys: &CoxeterSystem,
    u: Element,
    v: Element,
    with_bruhat_graph: bool,
) -> Result<BruhatInterval> {
    build_interval_with_limit(sys, u, v, with_bruhat_graph, None)
}

pub fn build_interval_with_limit(
    sys: &CoxeterSystem,
    u: Element,
    v: Element,
    with_bruhat_graph: bool,
    limit: Option<usize>,
) -> Result<BruhatInterval> {
    if !bruhat_leq(sys, u, v) {
        return Err(Error::NotComparable { u: sys.display(u), v: sys.display(v) });
    }
    let mut dels: HashMap<Element, Vec<(Element, usize)>> = HashMap::new();
    let mut stack = vec![v];
    let mut seen: HashSet<Element> = HashSet::from([v]);
    while let Some(y) = stack.pop() {
        let ds = deletions(sys, y);
        let target = sys.length(y).saturating_sub(1);
        for &(z, _) in &ds {
            if sys.length(z) == target && !seen.contains(&z) && bruhat_leq(sys, u, z) {
                seen.insert(z);
                stack.push(z);
                if let Some(cap) = limit {
                    if seen.len() > cap {
                        return Err(Error::IntervalTooLarge { cap });
                    }
                }
            }
        }
        dels.insert(y, ds);
    }
    let mut elements: Vec<Element> = seen.into_iter().collect();
    elements.sort_unstable();
    let index: HashMap<Element, usize> = elements.iter().enumerate().map(|(i, &w)| (w, i)).collect();
    let base = sys.length(u);
    let rank: Vec<u32> = elements.iter().map(|&w| sys.length(w) - base).collect();
    let down: Vec<Vec<usize>> = elements
        .iter()
        .map(|y| {
            let target = sys.length(*y).saturating_sub(1);
            dels[y]
                .iter()
                .filter(|&&(z, _)| sys.length(z) == target)
                .filter_map(|(z, _)| index.get(z).copied())
                .collect()
        })
        .collect();
    let edges = with_bruhat_graph.then(|| {
        let mut edges = Vec::new();
        for (upper, y) in elements.iter().enumerate() {
            for &(z, pos) in &dels[y] {
                if let Some(&lower) = index.get(&z) {
                    edges.push(BruhatEdge {
                        lower,
                        upper,
                        reflection: deletion_reflection(sys, *y, pos),
                    });
                }
            }
        }
        edges.sort_by_key(|e| (e.lower, e.upper));
        edges
    });
    let descents = elements.iter().map(|&w| sys.right_descents(w)).collect();
    Ok(BruhatInterval {
        bottom: u,
        top: v,
        lower: u == sys.identity(),
        poset: GradedPoset::from_covers(rank, down),
        elements,
        index,
        descents,
        edges,
    })
}

/// The elements of an interval lying in `W^J`.
#[derive(Clone, Debug)]
pub struct QuotientRestriction<'a> {
    pub parent: &'a BruhatInterval,
    pub j: GeneratorSet,
    /// Local indices into `parent`.
    pub members: Vec<usize>,
}

impl QuotientRestriction<'_> {
    pub fn elements(&self) -> Vec<Element> {
        self.members.iter().map(|&i| self.parent.element(i)).collect()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub fn quotient_restrict(interval: &BruhatInterval, j: GeneratorSet) -> QuotientRestriction<'_> {
    let members = (0..interval.len()).filter(|&i| interval.in_quotient(i, j)).collect();
    QuotientRestriction { parent: interval, j, members }
}

fn require_quotient(sys: &CoxeterSystem, j: GeneratorSet, ws: &[Element]) -> Result<()> {
    for &w in ws {
        if !sys.is_min_coset_rep(w, j) {
            return Err(Error::Precondition(format!("{} is not in W^{j}", sys.display(w))));
        }
    }
    Ok(())
}

/// `A^J_{u,v}`: atoms of `[u,v]` lying in `W^J`, in id order.
pub fn atoms_in_quotient(
    sys: &CoxeterSystem,
    u: Element,
    v: Element,
    j: GeneratorSet,
) -> Result<Vec<Element>> {
    require_quotient(sys, j, &[u, v])?;
    if !bruhat_leq(sys, u, v) {
        return Err(Error::NotComparable { u: sys.display(u), v: sys.display(v) });
    }
    if u == v {
        return Ok(Vec::new());
    }
    Ok(sys
        .elements_of_length(sys.length(u) + 1)
        .filter(|&a| sys.is_min_coset_rep(a, j) && bruhat_leq(sys, u, a) && bruhat_leq(sys, a, v))
        .collect())
}

/// Elements of the interval lying above none of `atoms`, computed from the
/// Hasse diagram alone.
pub fn non_dominated_set(interval: &BruhatInterval, atoms: &[Element]) -> Result<Vec<Element>> {
    let seeds = atoms
        .iter()
        .map(|&a| {
            interval
                .local_index(a)
                .ok_or_else(|| Error::Precondition("atom outside the interval".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(non_dominated_local(interval.poset(), &seeds)
        .into_iter()
        .map(|i| interval.element(i))
        .collect())
}

/// Local-index form of [`non_dominated_set`].
pub fn non_dominated_local(poset: &GradedPoset, seeds: &[usize]) -> Vec<usize> {
    let dominated = poset.up_closure(seeds);
    (0..poset.len()).filter(|&i| !dominated[i]).collect()
}

/// `uW_J ∩ [e, v]`, in id order.
pub fn coset_slice(
    sys: &CoxeterSystem,
    u: Element,
    v: Element,
    j: GeneratorSet,
) -> Result<Vec<Element>> {
    require_quotient(sys, j, &[u, v])?;
    let room = sys.length(v).saturating_sub(sys.length(u));
    let mut out: Vec<Element> = sys
        .parabolic_subgroup(j, room)
        .into_iter()
        .map(|w| sys.multiply(u, w))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|&uw| bruhat_leq(sys, uw, v))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// `[u, v]^J`, found by descending through covers inside `W^J`. Empty when
/// `u ≰ v` or either end lies outside `W^J`.
pub fn quotient_interval(sys: &CoxeterSystem, u: Element, v: Element, j: GeneratorSet) -> Vec<Element> {
    if !sys.is_min_coset_rep(u, j) || !sys.is_min_coset_rep(v, j) || !bruhat_leq(sys, u, v) {
        return Vec::new();
    }
    let mut seen: HashSet<Element> = HashSet::from([v]);
    let mut stack = vec![v];
    while let Some(y) = stack.pop() {
        for z in covers_down(sys, y) {
            if sys.is_min_coset_rep(z, j) && !seen.contains(&z) && bruhat_leq(sys, u, z) {
                seen.insert(z);
                stack.push(z);
            }
        }
    }
    let mut out: Vec<Element> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(name: &str) -> CoxeterSystem {
        CoxeterSystem::named(name).unwrap()
    }

    fn el(sys: &CoxeterSystem, word: &[usize]) -> Element {
        sys.element_from_word(word).unwrap()
    }

    /// Subword criterion: does some subword of the canonical word of `v`
    /// evaluate to `u`?
    fn subword_leq(sys: &CoxeterSystem, u: Element, v: Element) -> bool {
        let word = sys.word(v);
        (0u32..1 << word.len()).any(|mask| {
            let sub: Vec<usize> =
                (0..word.len()).filter(|i| mask & (1 << i) != 0).map(|i| word[i] as usize).collect();
            sys.element_from_word(&sub).unwrap() == u
        })
    }

    #[test]
    fn leq_examples() {
        let a2 = sys("A2");
        let (e, s1, s2) = (a2.identity(), el(&a2, &[0]), el(&a2, &[1]));
        for w in a2.elements() {
            assert!(bruhat_leq(&a2, e, w));
        }
        assert!(!bruhat_leq(&a2, s1, s2));
        assert!(bruhat_leq(&a2, s1, el(&a2, &[1, 0])));
        assert!(subword_leq(&a2, s1, el(&a2, &[1, 0])));
    }

    #[test]
    fn three_routes_agree_on_a3() {
        let a3 = sys("A3");
        for u in a3.elements() {
            for v in a3.elements() {
                let sub = subword_leq(&a3, u, v);
                assert_eq!(bruhat_leq_lifting(&a3, u, v), sub);
                assert_eq!(bruhat_leq_tableau(&a3, u, v), Some(sub));
            }
        }
    }

    #[test]
    fn lifting_matches_subwords_on_b3_and_h3() {
        for name in ["B3", "H3"] {
            let s = sys(name);
            let sample: Vec<Element> = s.elements().step_by(3).collect();
            for &u in &sample {
                for &v in &sample {
                    assert_eq!(bruhat_leq_lifting(&s, u, v), subword_leq(&s, u, v), "{name}");
                }
            }
        }
    }

    #[test]
    fn covers_down_examples() {
        let a2 = sys("A2");
        assert!(covers_down(&a2, a2.identity()).is_empty());
        let mut got = covers_down(&a2, el(&a2, &[0, 1]));
        got.sort();
        assert_eq!(got, vec![el(&a2, &[0]), el(&a2, &[1])]);
        let w0 = a2.longest_element().unwrap();
        assert_eq!(covers_down(&a2, w0), vec![el(&a2, &[0, 1]), el(&a2, &[1, 0])]);
    }

    #[test]
    fn boolean_intervals_in_a3() {
        let a3 = sys("A3");
        let e = a3.identity();
        let single = build_interval(&a3, e, e, false).unwrap();
        assert_eq!(single.len(), 1);
        for word in [[0, 1, 2], [1, 0, 2]] {
            let v = el(&a3, &word);
            let iv = build_interval(&a3, e, v, true).unwrap();
            assert_eq!(iv.len(), 8);
            let ranks: Vec<u32> = iv.poset().ranks().to_vec();
            assert_eq!(ranks, vec![0, 1, 1, 1, 2, 2, 2, 3]);
            assert_eq!(iv.covers().len(), 12);
        }
        assert!(matches!(
            build_interval(&a3, el(&a3, &[0]), el(&a3, &[1]), false),
            Err(Error::NotComparable { .. })
        ));
    }

    #[test]
    fn interval_size_cap() {
        let a3 = sys("A3");
        let w0 = a3.longest_element().unwrap();
        let r = build_interval_with_limit(&a3, a3.identity(), w0, false, Some(10));
        assert!(matches!(r, Err(Error::IntervalTooLarge { cap: 10 })));
    }

    #[test]
    fn bruhat_graph_edges() {
        let a2 = sys("A2");
        let iv = build_interval(&a2, a2.identity(), el(&a2, &[0, 1]), true).unwrap();
        assert_eq!(iv.bruhat_edges().unwrap().len(), 4);
        let w0 = a2.longest_element().unwrap();
        let full = build_interval(&a2, a2.identity(), w0, true).unwrap();
        let edges = full.bruhat_edges().unwrap();
        // 3 reflections, each element has 3 edges: 6*3/2
        assert_eq!(edges.len(), 9);
        for e in edges {
            let (y, y2) = (full.element(e.lower), full.element(e.upper));
            let t = e.reflection.unwrap();
            assert_eq!(a2.multiply(y, t).unwrap(), y2);
            assert!(a2.length(y) < a2.length(y2));
        }
        assert!(edges.iter().any(|e| e.lower == 0 && e.upper == full.len() - 1));
    }

    #[test]
    fn quotient_restriction_examples() {
        let a3 = sys("A3");
        let iv = build_interval(&a3, a3.identity(), el(&a3, &[0, 1, 2]), false).unwrap();
        assert_eq!(quotient_restrict(&iv, GeneratorSet::EMPTY).len(), 8);
        assert_eq!(quotient_restrict(&iv, GeneratorSet::singleton(0)).len(), 6);
        let u = el(&a3, &[1]);
        let point = build_interval(&a3, u, u, false).unwrap();
        assert_eq!(quotient_restrict(&point, GeneratorSet::singleton(0)).elements(), vec![u]);
    }

    #[test]
    fn atoms_in_quotient_examples() {
        let a3 = sys("A3");
        let e = a3.identity();
        let j1 = GeneratorSet::singleton(0);
        let j2 = GeneratorSet::singleton(1);
        assert!(atoms_in_quotient(&a3, e, e, j1).unwrap().is_empty());
        let v1 = el(&a3, &[0, 1, 2]);
        let v2 = el(&a3, &[1, 0, 2]);
        assert_eq!(atoms_in_quotient(&a3, e, v1, j1).unwrap().len(), 2);
        assert_eq!(atoms_in_quotient(&a3, e, v2, j2).unwrap().len(), 2);
        assert!(matches!(atoms_in_quotient(&a3, e, v2, j1), Err(Error::Precondition(_))));
    }

    #[test]
    fn non_dominated_examples() {
        let a3 = sys("A3");
        let e = a3.identity();
        let v = el(&a3, &[0, 1, 2]);
        let iv = build_interval(&a3, e, v, false).unwrap();
        assert_eq!(non_dominated_set(&iv, &[]).unwrap().len(), 8);
        let all_atoms: Vec<Element> = iv.atoms().iter().map(|&i| iv.element(i)).collect();
        assert_eq!(non_dominated_set(&iv, &all_atoms).unwrap(), vec![e]);
        let j1 = GeneratorSet::singleton(0);
        let atoms = atoms_in_quotient(&a3, e, v, j1).unwrap();
        let nd = non_dominated_set(&iv, &atoms).unwrap();
        assert_eq!(nd, coset_slice(&a3, e, v, j1).unwrap());
        assert_eq!(nd, vec![e, el(&a3, &[0])]);
    }

    #[test]
    fn coset_slice_examples() {
        let a3 = sys("A3");
        let u = el(&a3, &[1]);
        let v = el(&a3, &[0, 1, 2]);
        assert_eq!(coset_slice(&a3, u, v, GeneratorSet::EMPTY).unwrap(), vec![u]);
        let j = GeneratorSet::singleton(2);
        assert_eq!(coset_slice(&a3, u, u, j).unwrap(), vec![u]);
    }

    #[test]
    fn quotient_interval_matches_filter() {
        let b3 = sys("B3");
        let w0 = b3.longest_element().unwrap();
        for j in GeneratorSet::all_subsets(3) {
            let top = b3.project(w0, j);
            let iv = build_interval(&b3, b3.identity(), top, false).unwrap();
            let expected = quotient_restrict(&iv, j).elements();
            assert_eq!(quotient_interval(&b3, b3.identity(), top, j), expected);
        }
    }

    #[test]
    fn graded_poset_helpers() {
        let b3 = GradedPoset::boolean_lattice(3);
        assert_eq!(b3.len(), 8);
        assert!(b3.leq(0, 7));
        assert!(!b3.leq(1, 2));
        assert_eq!(b3.minima(), vec![0]);
        let c = GradedPoset::chain(2);
        assert_eq!(c.height(), 2);
        assert!(c.leq(0, 2));
    }
}
