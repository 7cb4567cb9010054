use coxkl::bruhat::bruhat_leq;
use coxkl::kl::audit::{audit_p_family, audit_r_family};
use coxkl::{CoxeterSystem, Element, GeneratorSet, IntPolynomial, KlEngine, ParabolicContext, XParam};
use num_bigint::BigInt;

fn sys(name: &str) -> CoxeterSystem {
    CoxeterSystem::named(name).unwrap()
}

fn quotient_pairs(s: &CoxeterSystem, j: GeneratorSet) -> Vec<(Element, Element)> {
    let members: Vec<Element> = s.elements().filter(|&w| s.is_min_coset_rep(w, j)).collect();
    let mut out = Vec::new();
    for &v in &members {
        for &u in &members {
            if bruhat_leq(s, u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

#[test]
fn recursion_matches_deodhar_sums() {
    for name in ["A3", "A4", "B3"] {
        let s = sys(name);
        let kl = KlEngine::new(&s);
        for j in GeneratorSet::all_subsets(s.rank()) {
            for (u, v) in quotient_pairs(&s, j) {
                for x in XParam::BOTH {
                    let ctx = ParabolicContext::new(j, x);
                    assert_eq!(
                        kl.parabolic_r_poly(u, v, ctx).unwrap(),
                        kl.deodhar_r_sum(u, v, ctx).unwrap(),
                        "{name} R J={j} x={x}"
                    );
                }
                let ctx = ParabolicContext::new(j, XParam::Q);
                assert_eq!(
                    kl.parabolic_p_poly(u, v, ctx).unwrap(),
                    kl.deodhar_p_sum(u, v, j).unwrap(),
                    "{name} P J={j}"
                );
            }
        }
    }
}

#[test]
fn w0_duality() {
    for name in ["A3", "A4", "B3"] {
        let s = sys(name);
        let kl = KlEngine::new(&s);
        for (u, v) in quotient_pairs(&s, GeneratorSet::EMPTY) {
            assert!(kl.w0_dual_r_check(u, v).unwrap(), "{name}");
        }
    }
}

#[test]
fn ordinary_families_ignore_x_and_pass_classical_checks() {
    for name in ["A3", "B3"] {
        let s = sys(name);
        let kl = KlEngine::new(&s);
        let minus = ParabolicContext::new(GeneratorSet::EMPTY, XParam::MinusOne);
        let q = ParabolicContext::new(GeneratorSet::EMPTY, XParam::Q);
        for (u, v) in quotient_pairs(&s, GeneratorSet::EMPTY) {
            let r = kl.r_poly(u, v);
            let p = kl.p_poly(u, v);
            assert_eq!(kl.parabolic_r_poly(u, v, minus).unwrap(), r);
            assert_eq!(kl.parabolic_r_poly(u, v, q).unwrap(), r);
            assert_eq!(kl.parabolic_p_poly(u, v, minus).unwrap(), p);
            assert_eq!(kl.parabolic_p_poly(u, v, q).unwrap(), p);
            let d = (s.length(v) - s.length(u)) as usize;
            assert_eq!(r.degree(), Some(d));
            assert_eq!(r.leading_coeff(), Some(&BigInt::from(1)));
            assert_eq!(r.coeff(0), BigInt::from(if d.is_multiple_of(2) { 1 } else { -1 }));
            assert_eq!(p.coeff(0), BigInt::from(1));
        }
        for u in s.elements() {
            for v in s.elements().filter(|&v| !bruhat_leq(&s, u, v)) {
                assert!(kl.r_poly(u, v).is_zero() && kl.p_poly(u, v).is_zero());
            }
        }
    }
}

#[test]
fn definition_audits() {
    for name in ["A3", "B3"] {
        let s = sys(name);
        let kl = KlEngine::new(&s);
        for j in GeneratorSet::all_subsets(s.rank()) {
            for x in XParam::BOTH {
                let ctx = ParabolicContext::new(j, x);
                assert_eq!(audit_r_family(&kl, ctx).unwrap(), vec![], "{name} R J={j} x={x}");
                assert_eq!(audit_p_family(&kl, ctx).unwrap(), vec![], "{name} P J={j} x={x}");
            }
        }
    }
}

#[test]
fn all_s3_kl_polynomials_are_one() {
    let a2 = sys("A2");
    let kl = KlEngine::new(&a2);
    for (u, v) in quotient_pairs(&a2, GeneratorSet::EMPTY) {
        assert_eq!(kl.p_poly(u, v), IntPolynomial::one());
    }
}

#[test]
fn capped_affine_group_matches_its_deodhar_sums() {
    let desc = coxkl::SystemDescription::from_matrix(
        vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]],
        Some(6),
    );
    let s = CoxeterSystem::build(&desc).unwrap();
    let kl = KlEngine::new(&s);
    for j in GeneratorSet::all_subsets(3) {
        if j.len() == 3 {
            continue;
        }
        for (u, v) in quotient_pairs(&s, j) {
            for x in XParam::BOTH {
                let ctx = ParabolicContext::new(j, x);
                assert_eq!(kl.parabolic_r_poly(u, v, ctx).unwrap(), kl.deodhar_r_sum(u, v, ctx).unwrap());
            }
            let ctx = ParabolicContext::new(j, XParam::Q);
            assert_eq!(kl.parabolic_p_poly(u, v, ctx).unwrap(), kl.deodhar_p_sum(u, v, j).unwrap());
        }
    }
}
