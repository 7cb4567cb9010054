use coxkl::bruhat::{
    atoms_in_quotient, bruhat_leq, build_interval, coset_slice, non_dominated_set, quotient_interval,
    quotient_restrict,
};
use coxkl::{CoxeterSystem, Element, GeneratorSet, GradedPoset};

fn sys(name: &str) -> CoxeterSystem {
    CoxeterSystem::named(name).unwrap()
}

fn comparable_pairs(sys: &CoxeterSystem) -> Vec<(Element, Element)> {
    let mut out = Vec::new();
    for v in sys.elements() {
        for u in sys.elements() {
            if bruhat_leq(sys, u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

#[test]
fn projection_is_monotone() {
    for name in ["A3", "A4", "B3"] {
        let s = sys(name);
        let pairs = comparable_pairs(&s);
        for j in GeneratorSet::all_subsets(s.rank()) {
            for &(u, v) in &pairs {
                assert!(bruhat_leq(&s, s.project(u, j), s.project(v, j)), "{name} {j}");
            }
        }
    }
}

#[test]
fn coset_slice_equals_non_dominated_set() {
    for name in ["A3", "A4", "B3"] {
        let s = sys(name);
        for (u, v) in comparable_pairs(&s) {
            let interval = build_interval(&s, u, v, false).unwrap();
            for j in GeneratorSet::all_subsets(s.rank()) {
                if !s.is_min_coset_rep(u, j) || !s.is_min_coset_rep(v, j) {
                    continue;
                }
                let atoms = atoms_in_quotient(&s, u, v, j).unwrap();
                let combinatorial = non_dominated_set(&interval, &atoms).unwrap();
                assert_eq!(coset_slice(&s, u, v, j).unwrap(), combinatorial, "{name} {j}");
            }
        }
    }
}

/// Longest and shortest maximal chain lengths from the bottom.
fn chain_lengths(poset: &GradedPoset) -> (Vec<usize>, Vec<usize>) {
    let n = poset.len();
    let mut longest = vec![0usize; n];
    let mut shortest = vec![usize::MAX; n];
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| poset.rank(i));
    for i in order {
        if poset.down(i).is_empty() {
            shortest[i] = 0;
            continue;
        }
        longest[i] = poset.down(i).iter().map(|&d| longest[d] + 1).max().unwrap();
        shortest[i] = poset.down(i).iter().map(|&d| shortest[d] + 1).min().unwrap();
    }
    (longest, shortest)
}

#[test]
fn intervals_are_graded_and_match_the_order() {
    for name in ["A3", "B3"] {
        let s = sys(name);
        for (u, v) in comparable_pairs(&s) {
            let interval = build_interval(&s, u, v, true).unwrap();
            let poset = interval.poset();
            let expected: Vec<Element> =
                s.elements().filter(|&y| bruhat_leq(&s, u, y) && bruhat_leq(&s, y, v)).collect();
            assert_eq!(interval.elements(), &expected[..]);
            let (longest, shortest) = chain_lengths(poset);
            let top = interval.len() - 1;
            let h = (s.length(v) - s.length(u)) as usize;
            assert_eq!((longest[top], shortest[top]), (h, h));
            assert_eq!(poset.minima(), vec![0]);
            for a in 0..interval.len() {
                for b in 0..interval.len() {
                    assert_eq!(
                        poset.leq(a, b),
                        bruhat_leq(&s, interval.element(a), interval.element(b))
                    );
                }
            }
            let edges = interval.bruhat_edges().unwrap();
            let mut from_edges: Vec<(usize, usize)> = edges
                .iter()
                .filter(|e| poset.rank(e.upper) == poset.rank(e.lower) + 1)
                .map(|e| (e.lower, e.upper))
                .collect();
            from_edges.sort_unstable();
            let mut covers: Vec<(usize, usize)> =
                (0..interval.len()).flat_map(|i| poset.down(i).iter().map(move |&d| (d, i))).collect();
            covers.sort_unstable();
            assert_eq!(from_edges, covers);
            for e in edges {
                let t = e.reflection.unwrap();
                let lower = interval.element(e.lower);
                assert_eq!(s.multiply(lower, t).unwrap(), interval.element(e.upper));
                assert_eq!(s.multiply(t, t).unwrap(), s.identity());
            }
        }
    }
}

#[test]
fn quotient_members_dominate_an_atom() {
    for name in ["A3", "B3"] {
        let s = sys(name);
        for (u, v) in comparable_pairs(&s) {
            let interval = build_interval(&s, u, v, false).unwrap();
            for j in GeneratorSet::all_subsets(s.rank()) {
                if !s.is_min_coset_rep(u, j) || !s.is_min_coset_rep(v, j) {
                    continue;
                }
                let restricted = quotient_restrict(&interval, j);
                assert_eq!(restricted.elements(), quotient_interval(&s, u, v, j));
                assert!(restricted.elements().contains(&u) && restricted.elements().contains(&v));
                let atoms = atoms_in_quotient(&s, u, v, j).unwrap();
                for y in restricted.elements().into_iter().filter(|&y| y != u) {
                    assert!(atoms.iter().any(|&a| bruhat_leq(&s, a, y)));
                }
            }
        }
    }
}
