//! Checks of identities over every applicable tuple of one system.

use coxkl::analysis::atoms_in_quotient_local;
use coxkl::bruhat::{bruhat_leq, build_interval_with_limit, coset_slice, non_dominated_local};
use coxkl::kl::audit::{audit_p_pair, audit_r_pair};
use coxkl::{Element, Error, GeneratorSet, IntPolynomial, KlEngine, ParabolicContext, XParam};
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::corpus::CorpusSystem;
use crate::report::{CheckReport, Violation};
use crate::spec::CheckId;
use crate::HarnessError;

type Outcome = Result<CheckReport, HarnessError>;

pub fn run_identity_check(check: CheckId, cs: &CorpusSystem, kl: &KlEngine<'_>, size_cap: usize) -> Outcome {
    match check {
        CheckId::QuotientMonotonicity => quotient_monotonicity(cs),
        CheckId::CosetSlice => coset_slice_check(cs, size_cap),
        CheckId::DeodharSums => deodhar_sums(cs, kl),
        CheckId::KlDefinitionAudit => definition_audit(cs, kl),
        CheckId::W0Duality => w0_duality(cs, kl),
        CheckId::OrdinarySanity => ordinary_sanity(cs, kl),
        other => Err(HarnessError::Config(format!("{other} is not a per-system identity check"))),
    }
}

fn over_pairs<F>(check: CheckId, cs: &CorpusSystem, f: F) -> Outcome
where
    F: Fn(Element, Element, &mut CheckReport) -> Result<(), HarnessError> + Sync,
{
    let parts: Vec<Outcome> = cs
        .pairs
        .par_chunks(64)
        .map(|chunk| {
            let mut part = CheckReport::new(check);
            for &(u, v) in chunk {
                f(u, v, &mut part)?;
            }
            Ok(part)
        })
        .collect();
    let mut total = CheckReport::new(check);
    for part in parts {
        total.absorb(part?);
    }
    Ok(total)
}

fn both_in_quotient(cs: &CorpusSystem, u: Element, v: Element) -> impl Iterator<Item = GeneratorSet> + '_ {
    GeneratorSet::all_subsets(cs.sys.rank())
        .filter(move |&j| cs.sys.is_min_coset_rep(u, j) && cs.sys.is_min_coset_rep(v, j))
}

fn violation(cs: &CorpusSystem, u: Element, v: Element, detail: String) -> Violation {
    Violation::simple(&cs.label, cs.sys.word_string(u), cs.sys.word_string(v), detail)
}

fn poly_violation(
    cs: &CorpusSystem,
    (u, v): (Element, Element),
    ctx: Option<ParabolicContext>,
    family: &str,
    detail: &str,
    polys: Vec<IntPolynomial>,
) -> Violation {
    Violation {
        j: ctx.map(|c| c.j.to_string()),
        x: ctx.map(|c| c.x.name().to_string()),
        family: Some(family.to_string()),
        polynomials: polys,
        ..violation(cs, u, v, detail.to_string())
    }
}

fn quotient_monotonicity(cs: &CorpusSystem) -> Outcome {
    let sys = &cs.sys;
    over_pairs(CheckId::QuotientMonotonicity, cs, |u, v, r| {
        for j in GeneratorSet::all_subsets(sys.rank()) {
            r.examined += 1;
            let (pu, pv) = (sys.project(u, j), sys.project(v, j));
            if !bruhat_leq(sys, pu, pv) {
                r.violations.push(Violation {
                    j: Some(j.to_string()),
                    ..violation(
                        cs,
                        u,
                        v,
                        format!("projections {} and {} are not comparable", sys.word_string(pu), sys.word_string(pv)),
                    )
                });
            }
        }
        Ok(())
    })
}

fn coset_slice_check(cs: &CorpusSystem, size_cap: usize) -> Outcome {
    let sys = &cs.sys;
    over_pairs(CheckId::CosetSlice, cs, |u, v, r| {
        let subsets: Vec<GeneratorSet> = both_in_quotient(cs, u, v).collect();
        let interval = match build_interval_with_limit(sys, u, v, false, Some(size_cap)) {
            Ok(i) => i,
            Err(Error::IntervalTooLarge { .. }) => {
                r.skipped += subsets.len() as u64;
                return Ok(());
            }
            Err(e) => return Err(e.into()),
        };
        for j in subsets {
            r.examined += 1;
            let seeds = atoms_in_quotient_local(&interval, j);
            let mut combinatorial: Vec<Element> = non_dominated_local(interval.poset(), &seeds)
                .into_iter()
                .map(|i| interval.element(i))
                .collect();
            combinatorial.sort_unstable();
            let mut slice = coset_slice(sys, u, v, j)?;
            slice.sort_unstable();
            if slice != combinatorial {
                let words = |ws: &[Element]| ws.iter().map(|&w| sys.word_string(w)).collect::<Vec<_>>().join(" ");
                r.violations.push(Violation {
                    j: Some(j.to_string()),
                    ..violation(cs, u, v, format!("coset slice [{}] vs non-dominated [{}]", words(&slice), words(&combinatorial)))
                });
            }
        }
        Ok(())
    })
}

fn deodhar_sums(cs: &CorpusSystem, kl: &KlEngine<'_>) -> Outcome {
    over_pairs(CheckId::DeodharSums, cs, |u, v, r| {
        for j in both_in_quotient(cs, u, v) {
            for x in XParam::BOTH {
                let ctx = ParabolicContext::new(j, x);
                r.examined += 1;
                let (rec, sum) = (kl.parabolic_r_poly(u, v, ctx)?, kl.deodhar_r_sum(u, v, ctx)?);
                if rec != sum {
                    r.violations.push(poly_violation(cs, (u, v), Some(ctx), "R", "recursion vs Deodhar sum", vec![rec, sum]));
                }
            }
            let ctx = ParabolicContext::new(j, XParam::Q);
            r.examined += 1;
            let (inv, sum) = (kl.parabolic_p_poly(u, v, ctx)?, kl.deodhar_p_sum(u, v, j)?);
            if inv != sum {
                r.violations.push(poly_violation(cs, (u, v), Some(ctx), "P", "inversion vs Deodhar sum", vec![inv, sum]));
            }
        }
        Ok(())
    })
}

fn definition_audit(cs: &CorpusSystem, kl: &KlEngine<'_>) -> Outcome {
    let sys = &cs.sys;
    let tops: Vec<Element> = sys.elements().collect();
    let parts: Vec<Outcome> = tops
        .par_iter()
        .map(|&v| {
            let mut part = CheckReport::new(CheckId::KlDefinitionAudit);
            let lv = sys.length(v);
            let floor = cs.height.map_or(0, |h| lv.saturating_sub(h));
            for u in (floor..=lv).flat_map(|len| sys.elements_of_length(len)) {
                for j in both_in_quotient(cs, u, v) {
                    for x in XParam::BOTH {
                        let ctx = ParabolicContext::new(j, x);
                        part.examined += 2;
                        let found = audit_r_pair(kl, ctx, u, v)?.into_iter().chain(audit_p_pair(kl, ctx, u, v)?);
                        for a in found {
                            part.violations.push(Violation {
                                j: Some(j.to_string()),
                                x: Some(x.name().to_string()),
                                family: Some(a.family.to_string()),
                                ..violation(cs, u, v, format!("{}: {}", a.condition, a.detail))
                            });
                        }
                    }
                }
            }
            Ok(part)
        })
        .collect();
    let mut total = CheckReport::new(CheckId::KlDefinitionAudit);
    for part in parts {
        total.absorb(part?);
    }
    Ok(total)
}

fn w0_duality(cs: &CorpusSystem, kl: &KlEngine<'_>) -> Outcome {
    let sys = &cs.sys;
    let Some(w0) = sys.longest_element() else {
        let mut r = CheckReport::new(CheckId::W0Duality);
        r.skipped = cs.pairs.len() as u64;
        r.notes.push(format!("{}: no longest element in the table", cs.label));
        return Ok(r);
    };
    over_pairs(CheckId::W0Duality, cs, |u, v, r| {
        r.examined += 1;
        if !kl.w0_dual_r_check(u, v)? {
            let (a, b) = (sys.multiply(w0, v)?, sys.multiply(w0, u)?);
            r.violations.push(poly_violation(
                cs,
                (u, v),
                None,
                "R",
                "R(u,v) vs R(w0 v, w0 u)",
                vec![kl.r_poly(u, v), kl.r_poly(a, b)],
            ));
        }
        Ok(())
    })
}

fn ordinary_sanity(cs: &CorpusSystem, kl: &KlEngine<'_>) -> Outcome {
    let sys = &cs.sys;
    let one = BigInt::from(1);
    over_pairs(CheckId::OrdinarySanity, cs, |u, v, rep| {
        rep.examined += 1;
        let r = kl.r_poly(u, v);
        let p = kl.p_poly(u, v);
        let mut fail = |ctx: Option<ParabolicContext>, family: &str, what: &str, polys: Vec<IntPolynomial>| {
            rep.violations.push(poly_violation(cs, (u, v), ctx, family, what, polys));
        };
        for x in XParam::BOTH {
            let ctx = ParabolicContext::new(GeneratorSet::EMPTY, x);
            let rx = kl.parabolic_r_poly(u, v, ctx)?;
            if rx != r {
                fail(Some(ctx), "R", "depends on x at J = {}", vec![r.clone(), rx]);
            }
            let px = kl.parabolic_p_poly(u, v, ctx)?;
            if px != p {
                fail(Some(ctx), "P", "depends on x at J = {}", vec![p.clone(), px]);
            }
        }
        let d = (sys.length(v) - sys.length(u)) as usize;
        let sign = BigInt::from(if d.is_multiple_of(2) { 1 } else { -1 });
        if r.degree() != Some(d) || r.leading_coeff() != Some(&one) || r.coeff(0) != sign {
            fail(None, "R", "expected a monic polynomial of degree l(v)-l(u) with constant term (-1)^d", vec![r.clone()]);
        }
        if p.coeff(0) != one || (d > 0 && 2 * p.degree().unwrap_or(0) > d - 1) {
            fail(None, "P", "expected constant term 1 and degree at most (d-1)/2", vec![p.clone()]);
        }
        Ok(())
    })
}
