use coxkl::{Backend, CoxeterSystem, Element, GeneratorSet, Side, SystemDescription};
use proptest::prelude::*;

fn build(name: &str, backend: Option<Backend>) -> CoxeterSystem {
    let mut desc = SystemDescription::named(name);
    if let Some(b) = backend {
        desc = desc.with_backend(b);
    }
    CoxeterSystem::build(&desc).unwrap()
}

fn assert_same_group(native: &CoxeterSystem, generic: &CoxeterSystem) {
    assert_eq!(native.len(), generic.len());
    let rank = native.rank();
    for (a, b) in native.elements().zip(generic.elements()) {
        assert_eq!(native.word(a), generic.word(b));
        assert_eq!(native.length(a), generic.length(b));
        assert_eq!(native.right_descents(a), generic.right_descents(b));
        assert_eq!(native.left_descents(a), generic.left_descents(b));
        for s in 0..rank {
            for side in [Side::Left, Side::Right] {
                let x = native.mul_gen(a, s, side).unwrap();
                let y = generic.mul_gen(b, s, side).unwrap();
                assert_eq!(native.word(x), generic.word(y));
            }
        }
        for j in GeneratorSet::all_subsets(rank) {
            let (p, q) = native.parabolic_decompose(a, j);
            let (p2, q2) = generic.parabolic_decompose(b, j);
            assert_eq!((native.word(p), native.word(q)), (generic.word(p2), generic.word(q2)));
        }
    }
}

#[test]
fn generic_agrees_with_permutations() {
    for name in ["A3", "A4"] {
        assert_same_group(&build(name, None), &build(name, Some(Backend::GenericWord)));
    }
}

#[test]
fn generic_agrees_with_signed_permutations() {
    assert_same_group(&build("B3", None), &build("B3", Some(Backend::GenericWord)));
    assert_same_group(&build("D4", None), &build("D4", Some(Backend::GenericWord)));
}

#[test]
fn lengths_change_by_one() {
    for name in ["A4", "B3", "D4", "H3"] {
        let sys = build(name, None);
        for w in sys.elements() {
            for s in 0..sys.rank() {
                for side in [Side::Left, Side::Right] {
                    let ws = sys.mul_gen(w, s, side).unwrap();
                    assert_eq!(sys.length(ws).abs_diff(sys.length(w)), 1);
                    assert_eq!(sys.mul_gen(ws, s, side).unwrap(), w);
                }
            }
        }
    }
}

#[test]
fn decomposition_is_the_unique_factorization() {
    for name in ["A3", "B3"] {
        let sys = build(name, None);
        for j in GeneratorSet::all_subsets(sys.rank()) {
            let quotient: Vec<Element> =
                sys.elements().filter(|&w| sys.is_min_coset_rep(w, j)).collect();
            let sub = sys.parabolic_subgroup(j, sys.max_length());
            for w in sys.elements() {
                let mut factorizations = Vec::new();
                for &a in &quotient {
                    for &b in &sub {
                        if sys.multiply(a, b).unwrap() == w {
                            factorizations.push((a, b));
                        }
                    }
                }
                assert_eq!(factorizations, vec![sys.parabolic_decompose(w, j)]);
                let (a, b) = factorizations[0];
                assert_eq!(sys.length(w), sys.length(a) + sys.length(b));
            }
        }
    }
}

#[test]
fn enumeration_counts() {
    let a2 = build("A2", None);
    assert_eq!(a2.enumerate_up_to_length(0).unwrap(), vec![a2.identity()]);
    assert_eq!(a2.enumerate_up_to_length(3).unwrap().len(), 6);
    assert_eq!(build("A3", None).enumerate_up_to_length(6).unwrap().len(), 24);
}

fn evaluate_permutation(points: usize, word: &[usize]) -> Vec<i8> {
    let mut data: Vec<i8> = (1..=points as i8).collect();
    for &s in word {
        data.swap(s, s + 1);
    }
    data
}

fn evaluate_signed(points: usize, word: &[usize]) -> Vec<i8> {
    let mut data: Vec<i8> = (1..=points as i8).collect();
    for &s in word {
        if s + 1 < points {
            data.swap(s, s + 1);
        } else {
            data[points - 1] = -data[points - 1];
        }
    }
    data
}

proptest! {
    #[test]
    fn canonical_forms_match_permutations(
        u in prop::collection::vec(0usize..3, 0..=12),
        v in prop::collection::vec(0usize..3, 0..=12),
    ) {
        let generic = build("A3", Some(Backend::GenericWord));
        let (cu, cv) = (generic.element_from_word(&u).unwrap(), generic.element_from_word(&v).unwrap());
        let (pu, pv) = (evaluate_permutation(4, &u), evaluate_permutation(4, &v));
        prop_assert_eq!(generic.word(cu) == generic.word(cv), pu == pv);
        let native = build("A3", None);
        prop_assert_eq!(native.permutation(native.element_from_word(&u).unwrap()).unwrap(), &pu[..]);
    }

    #[test]
    fn canonical_forms_match_signed_permutations(
        u in prop::collection::vec(0usize..3, 0..=12),
        v in prop::collection::vec(0usize..3, 0..=12),
    ) {
        let generic = build("B3", Some(Backend::GenericWord));
        let (cu, cv) = (generic.element_from_word(&u).unwrap(), generic.element_from_word(&v).unwrap());
        let (pu, pv) = (evaluate_signed(3, &u), evaluate_signed(3, &v));
        prop_assert_eq!(generic.word(cu) == generic.word(cv), pu == pv);
        let native = build("B3", None);
        prop_assert_eq!(native.permutation(native.element_from_word(&u).unwrap()).unwrap(), &pu[..]);
    }
}
