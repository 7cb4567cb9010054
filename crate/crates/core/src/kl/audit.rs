//! Post-hoc checks that computed families satisfy their defining conditions.
//!
//! The engine evaluates the R-recursion only at the smallest left descent;
//! the audit re-checks it at every left descent and re-derives the
//! P-conditions directly, so a wrong branch or inversion step shows up here.

use serde::Serialize;

use super::{KlEngine, ParabolicContext};
use crate::bruhat::{bruhat_leq, quotient_interval};
use crate::coxeter::{Element, Side};
use crate::error::Result;
use crate::poly::IntPolynomial;

/// A failed defining condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditViolation {
    pub family: &'static str,
    pub condition: &'static str,
    pub u: String,
    pub v: String,
    pub detail: String,
}

fn violation(
    engine: &KlEngine<'_>,
    family: &'static str,
    condition: &'static str,
    u: Element,
    v: Element,
    detail: String,
) -> AuditViolation {
    let sys = engine.system();
    AuditViolation { family, condition, u: sys.word_string(u), v: sys.word_string(v), detail }
}

fn quotient_elements(engine: &KlEngine<'_>, ctx: ParabolicContext) -> Vec<Element> {
    let sys = engine.system();
    sys.elements().filter(|&w| sys.is_min_coset_rep(w, ctx.j)).collect()
}

/// Checks the vanishing, unit and descent-recursion conditions for
/// `R^{J,x}` on every pair of `W^J`.
pub fn audit_r_family(engine: &KlEngine<'_>, ctx: ParabolicContext) -> Result<Vec<AuditViolation>> {
    let members = quotient_elements(engine, ctx);
    let mut out = Vec::new();
    for &u in &members {
        for &v in &members {
            out.extend(audit_r_pair(engine, ctx, u, v)?);
        }
    }
    Ok(out)
}

/// Checks the vanishing, unit, degree-bound and inversion conditions for
/// `P^{J,x}` on every pair of `W^J`.
pub fn audit_p_family(engine: &KlEngine<'_>, ctx: ParabolicContext) -> Result<Vec<AuditViolation>> {
    let members = quotient_elements(engine, ctx);
    let mut out = Vec::new();
    for &u in &members {
        for &v in &members {
            out.extend(audit_p_pair(engine, ctx, u, v)?);
        }
    }
    Ok(out)
}

/// R-conditions at one pair `u, v ∈ W^J`, with the recursion tried at every
/// left descent of `v`.
pub fn audit_r_pair(
    engine: &KlEngine<'_>,
    ctx: ParabolicContext,
    u: Element,
    v: Element,
) -> Result<Vec<AuditViolation>> {
    let sys = engine.system();
    let r = |a: Element, b: Element| engine.parabolic_r_poly(a, b, ctx);
    let value = r(u, v)?;
    let mut out = Vec::new();
    if !bruhat_leq(sys, u, v) {
        if !value.is_zero() {
            out.push(violation(engine, "R", "vanishing", u, v, format!("got {value}")));
        }
        return Ok(out);
    }
    if u == v {
        if value != IntPolynomial::one() {
            out.push(violation(engine, "R", "unit", u, v, format!("got {value}")));
        }
        return Ok(out);
    }
    for s in sys.left_descents(v).iter() {
        let Some(sv) = sys.try_mul_gen(v, s, Side::Left) else { continue };
        let Some(su) = sys.try_mul_gen(u, s, Side::Left) else { continue };
        let expected = if sys.length(su) < sys.length(u) {
            r(su, sv)?
        } else if sys.is_min_coset_rep(su, ctx.j) {
            &(&IntPolynomial::from_i64(&[-1, 1]) * &r(u, sv)?) + &r(su, sv)?.shift(1)
        } else {
            &ctx.x.dead_factor() * &r(u, sv)?
        };
        if expected != value {
            out.push(violation(
                engine,
                "R",
                "descent-recursion",
                u,
                v,
                format!("s{}: expected {expected}, got {value}", s + 1),
            ));
        }
    }
    Ok(out)
}

/// P-conditions at one pair `u, v ∈ W^J`.
pub fn audit_p_pair(
    engine: &KlEngine<'_>,
    ctx: ParabolicContext,
    u: Element,
    v: Element,
) -> Result<Vec<AuditViolation>> {
    let sys = engine.system();
    let value = engine.parabolic_p_poly(u, v, ctx)?;
    let mut out = Vec::new();
    if !bruhat_leq(sys, u, v) {
        if !value.is_zero() {
            out.push(violation(engine, "P", "vanishing", u, v, format!("got {value}")));
        }
        return Ok(out);
    }
    if u == v {
        if value != IntPolynomial::one() {
            out.push(violation(engine, "P", "unit", u, v, format!("got {value}")));
        }
        return Ok(out);
    }
    let d = sys.length(v) - sys.length(u);
    if value.degree().is_some_and(|deg| 2 * deg as u32 > d - 1) {
        out.push(violation(
            engine,
            "P",
            "degree-bound",
            u,
            v,
            format!("{value} exceeds degree {}/2", d - 1),
        ));
        return Ok(out);
    }
    let mut rhs = IntPolynomial::zero();
    for sigma in quotient_interval(sys, u, v, ctx.j) {
        let r = engine.parabolic_r_poly(u, sigma, ctx)?;
        rhs += &(&r * &engine.parabolic_p_poly(sigma, v, ctx)?);
    }
    let lhs = value.bar_shift(d as usize);
    if lhs != rhs {
        out.push(violation(
            engine,
            "P",
            "inversion",
            u,
            v,
            format!("q^{d}P(1/q) = {lhs}, sum = {rhs}"),
        ));
    }
    Ok(out)
}
