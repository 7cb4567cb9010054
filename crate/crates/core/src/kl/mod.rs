//! Ordinary and parabolic R- and P-polynomials.
//!
//! Every parabolic polynomial has two routes: the defining recursion (the
//! runtime default, memoized) and the alternating sum over `W_J` of ordinary
//! polynomials. Tests and the harness cross-check the two.

pub mod audit;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::bruhat::{bruhat_leq, quotient_interval};
use crate::coxeter::{CoxeterSystem, Element, GeneratorSet, Side};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// The parameter `x` of the parabolic families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum XParam {
    #[serde(rename = "-1")]
    MinusOne,
    #[serde(rename = "q")]
    Q,
}

impl XParam {
    pub const BOTH: [XParam; 2] = [XParam::MinusOne, XParam::Q];

    pub fn parse(text: &str) -> Result<Self> {
        match text.trim() {
            "-1" | "minus-one" | "m1" => Ok(XParam::MinusOne),
            "q" => Ok(XParam::Q),
            other => Err(Error::Precondition(format!("x must be -1 or q, got `{other}`"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            XParam::MinusOne => "-1",
            XParam::Q => "q",
        }
    }

    /// `q - 1 - x`.
    fn dead_factor(self) -> IntPolynomial {
        match self {
            XParam::MinusOne => IntPolynomial::q(),
            XParam::Q => IntPolynomial::constant(-1),
        }
    }

    /// `(-x)^k`.
    fn neg_pow(self, k: u32) -> IntPolynomial {
        match self {
            XParam::MinusOne => IntPolynomial::one(),
            XParam::Q => IntPolynomial::monomial(if k.is_multiple_of(2) { 1 } else { -1 }, k as usize),
        }
    }
}

impl fmt::Display for XParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The pair `(J, x)` selecting a parabolic family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ParabolicContext {
    pub j: GeneratorSet,
    pub x: XParam,
}

impl ParabolicContext {
    pub fn new(j: GeneratorSet, x: XParam) -> Self {
        ParabolicContext { j, x }
    }

    /// `J = ∅`; the families do not depend on `x` there.
    pub fn ordinary() -> Self {
        ParabolicContext { j: GeneratorSet::EMPTY, x: XParam::MinusOne }
    }

    fn normalized(self) -> Self {
        if self.j.is_empty() {
            Self::ordinary()
        } else {
            self
        }
    }
}

type Key = (u32, u32, u32, XParam);

fn key(u: Element, v: Element, ctx: ParabolicContext) -> Key {
    (u.0, v.0, ctx.j.bits(), ctx.x)
}

type Memo = RwLock<HashMap<Key, Arc<IntPolynomial>>>;

/// Memoizing evaluator for one system. Safe to share between threads; the
/// tables only ever gain entries and every entry is a pure function of its key.
pub struct KlEngine<'s> {
    sys: &'s CoxeterSystem,
    r_memo: Memo,
    p_memo: Memo,
    zero: Arc<IntPolynomial>,
    one: Arc<IntPolynomial>,
}

impl<'s> KlEngine<'s> {
    pub fn new(sys: &'s CoxeterSystem) -> Self {
        KlEngine {
            sys,
            r_memo: RwLock::default(),
            p_memo: RwLock::default(),
            zero: Arc::new(IntPolynomial::zero()),
            one: Arc::new(IntPolynomial::one()),
        }
    }

    pub fn system(&self) -> &'s CoxeterSystem {
        self.sys
    }

    /// Number of memoized polynomials.
    pub fn cached_entries(&self) -> usize {
        self.r_memo.read().unwrap().len() + self.p_memo.read().unwrap().len()
    }

    fn require_quotient(&self, u: Element, v: Element, j: GeneratorSet) -> Result<()> {
        for w in [u, v] {
            if !self.sys.is_min_coset_rep(w, j) {
                return Err(Error::Precondition(format!(
                    "{} is not in W^{j}",
                    self.sys.display(w)
                )));
            }
        }
        Ok(())
    }

    /// The ordinary R-polynomial `R_{u,v}`.
    pub fn r_poly(&self, u: Element, v: Element) -> IntPolynomial {
        (*self.r_arc(u, v, ParabolicContext::ordinary())).clone()
    }

    /// `R^{J,x}_{u,v}` by the three-branch recursion on the smallest left
    /// descent of `v`.
    pub fn parabolic_r_poly(&self, u: Element, v: Element, ctx: ParabolicContext) -> Result<IntPolynomial> {
        self.require_quotient(u, v, ctx.j)?;
        Ok((*self.r_arc(u, v, ctx.normalized())).clone())
    }

    pub(crate) fn r_arc(&self, u: Element, v: Element, ctx: ParabolicContext) -> Arc<IntPolynomial> {
        let sys = self.sys;
        if u == v {
            return self.one.clone();
        }
        if sys.length(u) >= sys.length(v) || !bruhat_leq(sys, u, v) {
            return self.zero.clone();
        }
        let k = key(u, v, ctx);
        if let Some(hit) = self.r_memo.read().unwrap().get(&k) {
            return hit.clone();
        }
        let s = sys.left_descents(v).first().expect("v is not the identity");
        let sv = sys.try_mul_gen(v, s, Side::Left).expect("descent stays in the table");
        let result = if sys.left_descents(u).contains(s) {
            let su = sys.try_mul_gen(u, s, Side::Left).expect("descent stays in the table");
            (*self.r_arc(su, sv, ctx)).clone()
        } else {
            let su = sys
                .try_mul_gen(u, s, Side::Left)
                .expect("su is no longer than v, so it lies in the table");
            if sys.is_min_coset_rep(su, ctx.j) {
                let qm1 = IntPolynomial::from_i64(&[-1, 1]);
                &(&qm1 * &self.r_arc(u, sv, ctx)) + &self.r_arc(su, sv, ctx).shift(1)
            } else {
                &ctx.x.dead_factor() * &self.r_arc(u, sv, ctx)
            }
        };
        let result = Arc::new(result);
        self.r_memo.write().unwrap().insert(k, result.clone());
        result
    }

    /// `Σ_{w ∈ W_J} (-x)^{ℓ(w)} R_{uw,v}`.
    pub fn deodhar_r_sum(&self, u: Element, v: Element, ctx: ParabolicContext) -> Result<IntPolynomial> {
        self.require_quotient(u, v, ctx.j)?;
        let mut total = IntPolynomial::zero();
        for (w, uw) in self.coset_terms(u, v, ctx.j)? {
            let r = self.r_arc(uw, v, ParabolicContext::ordinary());
            total += &(&ctx.x.neg_pow(self.sys.length(w)) * &r);
        }
        Ok(total)
    }

    /// Pairs `(w, uw)` for `w ∈ W_J` with `uw ≤ v`. Only `ℓ(w) ≤ ℓ(v) - ℓ(u)`
    /// can contribute because lengths add along `uW_J`.
    fn coset_terms(&self, u: Element, v: Element, j: GeneratorSet) -> Result<Vec<(Element, Element)>> {
        let sys = self.sys;
        let Some(room) = sys.length(v).checked_sub(sys.length(u)) else {
            return Ok(Vec::new());
        };
        let mut out = Vec::new();
        for w in sys.parabolic_subgroup(j, room) {
            let uw = sys.multiply(u, w)?;
            if bruhat_leq(sys, uw, v) {
                out.push((w, uw));
            }
        }
        Ok(out)
    }

    /// The ordinary Kazhdan–Lusztig polynomial `P_{u,v}`.
    pub fn p_poly(&self, u: Element, v: Element) -> IntPolynomial {
        let p = self
            .p_arc(u, v, ParabolicContext::ordinary())
            .expect("ordinary inversion is always consistent");
        (*p).clone()
    }

    /// `P^{J,x}_{u,v}`, solving the inversion formula top-down over `[u,v]^J`.
    pub fn parabolic_p_poly(&self, u: Element, v: Element, ctx: ParabolicContext) -> Result<IntPolynomial> {
        self.require_quotient(u, v, ctx.j)?;
        Ok((*self.p_arc(u, v, ctx.normalized())?).clone())
    }

    pub(crate) fn p_arc(&self, u: Element, v: Element, ctx: ParabolicContext) -> Result<Arc<IntPolynomial>> {
        let sys = self.sys;
        if u == v {
            return Ok(self.one.clone());
        }
        if sys.length(u) >= sys.length(v) || !bruhat_leq(sys, u, v) {
            return Ok(self.zero.clone());
        }
        if let Some(hit) = self.p_memo.read().unwrap().get(&key(u, v, ctx)) {
            return Ok(hit.clone());
        }
        let members = quotient_interval(sys, u, v, ctx.j);
        let mut column: HashMap<Element, Arc<IntPolynomial>> = HashMap::new();
        column.insert(v, self.one.clone());
        {
            let memo = self.p_memo.read().unwrap();
            for &sigma in &members {
                if let Some(hit) = memo.get(&key(sigma, v, ctx)) {
                    column.insert(sigma, hit.clone());
                }
            }
        }
        let mut fresh = Vec::new();
        // Ids increase with length, so reverse id order visits longer
        // elements first.
        for (i, &sigma) in members.iter().enumerate().rev() {
            if column.contains_key(&sigma) {
                continue;
            }
            let mut rhs = IntPolynomial::zero();
            for &tau in &members[i + 1..] {
                if sys.length(tau) > sys.length(sigma) && bruhat_leq(sys, sigma, tau) {
                    let r = self.r_arc(sigma, tau, ctx);
                    if !r.is_zero() {
                        rhs += &(&*r * &column[&tau]);
                    }
                }
            }
            let d = sys.length(v) - sys.length(sigma);
            let p = invert_bar(d, &rhs).map_err(|detail| {
                Error::Inconsistent(format!(
                    "P^{{{},{}}} at ({}, {}): {detail}",
                    ctx.j,
                    ctx.x,
                    sys.display(sigma),
                    sys.display(v)
                ))
            })?;
            let p = Arc::new(p);
            column.insert(sigma, p.clone());
            fresh.push((key(sigma, v, ctx), p));
        }
        let result = column[&u].clone();
        let mut memo = self.p_memo.write().unwrap();
        for (k, p) in fresh {
            memo.insert(k, p);
        }
        Ok(result)
    }

    /// `Σ_{w ∈ W_J} (-1)^{ℓ(w)} P_{uw,v}`.
    pub fn deodhar_p_sum(&self, u: Element, v: Element, j: GeneratorSet) -> Result<IntPolynomial> {
        self.require_quotient(u, v, j)?;
        let mut total = IntPolynomial::zero();
        for (w, uw) in self.coset_terms(u, v, j)? {
            let p = self.p_arc(uw, v, ParabolicContext::ordinary())?;
            let sign = if self.sys.length(w).is_multiple_of(2) { 1 } else { -1 };
            total += &p.scale(sign);
        }
        Ok(total)
    }

    /// Whether `R_{u,v} = R_{w0·v, w0·u}`.
    pub fn w0_dual_r_check(&self, u: Element, v: Element) -> Result<bool> {
        let w0 = self.sys.longest_element().ok_or(Error::NoLongestElement)?;
        let (du, dv) = (self.sys.multiply(w0, v)?, self.sys.multiply(w0, u)?);
        Ok(self.r_poly(u, v) == self.r_poly(du, dv))
    }
}

/// Solves `q^d P(q^{-1}) - P(q) = rhs` for `P` of degree below `d/2`. The
/// coefficients come from the upper half of `rhs`; the lower half and the
/// middle coefficient must then match.
pub(crate) fn invert_bar(d: u32, rhs: &IntPolynomial) -> Result<IntPolynomial, String> {
    let d = d as usize;
    if rhs.degree().is_some_and(|deg| deg > d) {
        return Err(format!("right-hand side {rhs} has degree above {d}"));
    }
    let coeffs = (0..d).take_while(|i| 2 * i < d).map(|i| rhs.coeff(d - i)).collect();
    let p = IntPolynomial::from_coeffs(coeffs);
    let check = &p.bar_shift(d) - &p;
    if &check != rhs {
        return Err(format!("right-hand side {rhs} is not of the form q^{d}P(1/q) - P(q)"));
    }
    Ok(p)
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

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    /// Classical recursion `P_{x,w} = q^{1-c}P_{sx,v} + q^c P_{x,v} - Σ μ(z,v) q^{(ℓ(w)-ℓ(z))/2} P_{x,z}`
    /// with `w = sv`, `c = 1` if `sx < x`; independent of the inversion formula.
    struct ClassicKl<'a> {
        sys: &'a CoxeterSystem,
        memo: HashMap<(Element, Element), IntPolynomial>,
    }

    impl ClassicKl<'_> {
        fn p(&mut self, x: Element, w: Element) -> IntPolynomial {
            let sys = self.sys;
            if !bruhat_leq(sys, x, w) {
                return IntPolynomial::zero();
            }
            if x == w || sys.length(w) - sys.length(x) <= 2 {
                return IntPolynomial::one();
            }
            if let Some(hit) = self.memo.get(&(x, w)) {
                return hit.clone();
            }
            let s = sys.left_descents(w).first().unwrap();
            let v = sys.try_mul_gen(w, s, Side::Left).unwrap();
            let sx = sys.try_mul_gen(x, s, Side::Left).unwrap();
            let c = usize::from(sys.length(sx) < sys.length(x));
            let mut out = &self.p(sx, v).shift(1 - c) + &self.p(x, v).shift(c);
            let candidates: Vec<Element> = sys
                .elements()
                .filter(|&z| {
                    sys.left_descents(z).contains(s)
                        && sys.length(z) < sys.length(v)
                        && bruhat_leq(sys, x, z)
                        && bruhat_leq(sys, z, v)
                })
                .collect();
            for z in candidates {
                let gap = sys.length(v) - sys.length(z);
                if gap.is_multiple_of(2) {
                    continue;
                }
                let mu = self.p(z, v).coeff(((gap - 1) / 2) as usize);
                if mu == 0.into() {
                    continue;
                }
                let mu = i64::try_from(mu).unwrap();
                let shift = ((sys.length(w) - sys.length(z)) / 2) as usize;
                out = &out - &self.p(x, z).shift(shift).scale(mu);
            }
            self.memo.insert((x, w), out.clone());
            out
        }
    }

    #[test]
    fn r_examples() {
        let a2 = sys("A2");
        let kl = KlEngine::new(&a2);
        let (e, s1, s2) = (a2.identity(), el(&a2, &[0]), el(&a2, &[1]));
        assert_eq!(kl.r_poly(e, el(&a2, &[0, 1])), p(&[1, -2, 1]));
        assert_eq!(kl.r_poly(s1, s1), p(&[1]));
        assert!(kl.r_poly(s1, s2).is_zero());
        assert_eq!(kl.r_poly(e, el(&a2, &[0, 1, 0])), p(&[-1, 2, -2, 1]));
    }

    #[test]
    fn p_for_3412_is_one_plus_q() {
        let a3 = sys("A3");
        let kl = KlEngine::new(&a3);
        let v = a3.element_from_permutation(&[3, 4, 1, 2]).unwrap();
        assert_eq!(kl.p_poly(a3.identity(), v), p(&[1, 1]));
        let v = a3.element_from_permutation(&[4, 2, 3, 1]).unwrap();
        assert_eq!(kl.p_poly(a3.identity(), v), p(&[1, 1]));
    }

    #[test]
    fn p_matches_classical_recursion() {
        for name in ["A3", "B3"] {
            let s = sys(name);
            let kl = KlEngine::new(&s);
            let mut classic = ClassicKl { sys: &s, memo: HashMap::new() };
            for x in s.elements() {
                for w in s.elements() {
                    assert_eq!(kl.p_poly(x, w), classic.p(x, w), "{name} {x:?} {w:?}");
                }
            }
        }
    }

    #[test]
    fn covers_have_p_one() {
        let b3 = sys("B3");
        let kl = KlEngine::new(&b3);
        for v in b3.elements() {
            for u in crate::bruhat::covers_down(&b3, v) {
                assert_eq!(kl.p_poly(u, v), IntPolynomial::one());
            }
        }
    }

    #[test]
    fn small_parabolic_values() {
        let a3 = sys("A3");
        let kl = KlEngine::new(&a3);
        let e = a3.identity();
        let v1 = el(&a3, &[0, 1, 2]);
        let v2 = el(&a3, &[1, 0, 2]);
        let j1 = ParabolicContext::new(GeneratorSet::singleton(0), XParam::MinusOne);
        let j2 = ParabolicContext::new(GeneratorSet::singleton(1), XParam::MinusOne);
        assert_eq!(kl.parabolic_p_poly(e, v1, j1).unwrap(), p(&[1]));
        assert_eq!(kl.parabolic_p_poly(e, v2, j2).unwrap(), p(&[1, 1]));
        let q1 = ParabolicContext::new(GeneratorSet::singleton(0), XParam::Q);
        let q2 = ParabolicContext::new(GeneratorSet::singleton(1), XParam::Q);
        assert_eq!(
            kl.parabolic_p_poly(e, v1, q1).unwrap(),
            kl.parabolic_p_poly(e, v2, q2).unwrap()
        );
    }

    #[test]
    fn deodhar_shape_example() {
        let a3 = sys("A3");
        let kl = KlEngine::new(&a3);
        let e = a3.identity();
        let s1 = el(&a3, &[0]);
        let v = el(&a3, &[0, 1, 2]);
        let ctx = ParabolicContext::new(GeneratorSet::singleton(0), XParam::Q);
        let expected = &kl.r_poly(e, v) - &kl.r_poly(s1, v).shift(1);
        assert_eq!(kl.deodhar_r_sum(e, v, ctx).unwrap(), expected);
        assert_eq!(kl.parabolic_r_poly(e, v, ctx).unwrap(), expected);
        let expected = &kl.p_poly(e, v) - &kl.p_poly(s1, v);
        assert_eq!(kl.deodhar_p_sum(e, v, ctx.j).unwrap(), expected);
        assert_eq!(kl.parabolic_p_poly(e, v, ctx).unwrap(), expected);
    }

    #[test]
    fn preconditions() {
        let a3 = sys("A3");
        let kl = KlEngine::new(&a3);
        let j = ParabolicContext::new(GeneratorSet::singleton(0), XParam::Q);
        let s1 = el(&a3, &[0]);
        assert!(matches!(kl.parabolic_r_poly(s1, s1, j), Err(Error::Precondition(_))));
        assert!(matches!(kl.deodhar_p_sum(a3.identity(), s1, j.j), Err(Error::Precondition(_))));
    }

    #[test]
    fn x_is_irrelevant_for_empty_j() {
        let a3 = sys("A3");
        let kl = KlEngine::new(&a3);
        let v = a3.longest_element().unwrap();
        let a = ParabolicContext::new(GeneratorSet::EMPTY, XParam::MinusOne);
        let b = ParabolicContext::new(GeneratorSet::EMPTY, XParam::Q);
        for u in a3.elements() {
            assert_eq!(kl.parabolic_r_poly(u, v, a).unwrap(), kl.parabolic_r_poly(u, v, b).unwrap());
            assert_eq!(kl.parabolic_p_poly(u, v, a).unwrap(), kl.parabolic_p_poly(u, v, b).unwrap());
        }
    }

    #[test]
    fn w0_duality_on_a3() {
        let a3 = sys("A3");
        let kl = KlEngine::new(&a3);
        for u in a3.elements() {
            for v in a3.elements() {
                assert!(kl.w0_dual_r_check(u, v).unwrap());
            }
        }
    }

    #[test]
    fn w0_duality_needs_a_finite_group() {
        let desc = crate::SystemDescription::from_matrix(
            vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]],
            Some(3),
        );
        let s = CoxeterSystem::build(&desc).unwrap();
        let kl = KlEngine::new(&s);
        assert_eq!(kl.w0_dual_r_check(s.identity(), s.identity()), Err(Error::NoLongestElement));
    }

    #[test]
    fn inversion() {
        // P = 1 + q, d = 3: q^3 + q^2 - 1 - q
        assert_eq!(invert_bar(3, &p(&[-1, -1, 1, 1])).unwrap(), p(&[1, 1]));
        assert_eq!(invert_bar(1, &p(&[-1, 1])).unwrap(), p(&[1]));
        assert!(invert_bar(2, &p(&[-1, 1, 1])).is_err());
        assert!(invert_bar(1, &p(&[0, 0, 1])).is_err());
        assert_eq!(invert_bar(2, &IntPolynomial::zero()).unwrap(), IntPolynomial::zero());
    }

    #[test]
    fn engine_is_shareable_across_threads() {
        let b3 = sys("B3");
        let kl = KlEngine::new(&b3);
        let w0 = b3.longest_element().unwrap();
        let serial: Vec<IntPolynomial> = b3.elements().map(|u| kl.p_poly(u, w0)).collect();
        let fresh = &KlEngine::new(&b3);
        let parallel: Vec<IntPolynomial> = std::thread::scope(|scope| {
            let handles: Vec<_> = b3
                .elements()
                .map(|u| scope.spawn(move || fresh.p_poly(u, w0)))
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        assert_eq!(serial, parallel);
    }
}
