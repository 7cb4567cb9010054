//! Invariance checks: isomorphic intervals, under side conditions on atoms or
//! quotients, must carry equal polynomials.
//!
//! Intervals are bucketed by fingerprint and split into isomorphism classes,
//! each with a representative `R` and maps `ψ_I: I → R`. An instance
//! `(I, J)` is reduced to the `Aut(R)`-orbit of `ψ_I(S)`, where `S` is the
//! set of atoms (or elements) of `I` lying in `W^J`. Two instances admit an
//! isomorphism respecting `S` exactly when these orbits agree, so every
//! ordered pair in a bucket is decided without a pairwise search.

use std::collections::BTreeMap;

use coxkl::analysis::{
    atoms_in_quotient_local, find_isomorphisms, is_cosimple, is_short_edge, poset_fingerprint, poset_isomorphisms,
    Constraint, Fingerprint,
};
use coxkl::bruhat::build_interval_with_limit;
use coxkl::{BruhatInterval, Error, GeneratorSet, IntPolynomial, KlEngine, ParabolicContext, XParam};
use rayon::prelude::*;

use crate::corpus::CorpusSystem;
use crate::report::{CheckReport, HypothesisCount, InstanceRef, Violation};
use crate::spec::CheckId;
use crate::HarnessError;

/// Automorphism groups larger than this fall back to pairwise searches.
pub const AUTOMORPHISM_CAP: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum KeyKind {
    Isomorphic,
    Quotient,
    Atoms,
}

impl KeyKind {
    fn name(self) -> &'static str {
        match self {
            KeyKind::Isomorphic => "isomorphic",
            KeyKind::Quotient => "quotient-respecting",
            KeyKind::Atoms => "atom-respecting",
        }
    }

    fn constraint(self, j1: GeneratorSet, j2: GeneratorSet) -> Constraint {
        match self {
            KeyKind::Isomorphic => Constraint::None,
            KeyKind::Quotient => Constraint::QuotientIso { j1, j2 },
            KeyKind::Atoms => Constraint::AtomBijection { j1, j2 },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    R(XParam),
    P(XParam),
}

const R_BOTH: [Family; 2] = [Family::R(XParam::MinusOne), Family::R(XParam::Q)];
const P_BOTH: [Family; 2] = [Family::P(XParam::MinusOne), Family::P(XParam::Q)];

struct Plan {
    ordinary_only: bool,
    comparisons: Vec<(KeyKind, Vec<Family>)>,
}

fn plan(check: CheckId) -> Plan {
    let atoms = || (KeyKind::Atoms, vec![R_BOTH[0], R_BOTH[1], P_BOTH[1]]);
    match check {
        CheckId::CicOrdinary => Plan {
            ordinary_only: true,
            comparisons: vec![(KeyKind::Isomorphic, vec![R_BOTH[0], P_BOTH[0]])],
        },
        CheckId::CicParabolicQuotient => Plan {
            ordinary_only: false,
            comparisons: vec![(KeyKind::Quotient, [R_BOTH, P_BOTH].concat())],
        },
        CheckId::CicParabolicAtoms => Plan { ordinary_only: false, comparisons: vec![atoms()] },
        CheckId::LowerIntervals | CheckId::ShortEdgeIntervals => Plan {
            ordinary_only: false,
            comparisons: vec![atoms(), (KeyKind::Quotient, P_BOTH.to_vec())],
        },
        CheckId::CoelementaryIntervals => Plan {
            ordinary_only: false,
            comparisons: vec![(KeyKind::Atoms, R_BOTH.to_vec())],
        },
        other => unreachable!("{other} is not an invariance check"),
    }
}

struct Record {
    system: usize,
    interval: BruhatInterval,
    lower: bool,
    short_edge: bool,
    type_a: bool,
    cosimple: bool,
}

struct Oversize {
    height: u32,
    subsets: u64,
}

#[derive(Clone, Copy)]
struct Instance {
    record: usize,
    j: GeneratorSet,
}

struct Class {
    members: Vec<usize>,
    /// `psi[k][i]`: image in the representative of element `i` of member `k`.
    psi: Vec<Vec<usize>>,
    automorphisms: Option<Vec<Vec<usize>>>,
    coelementary: bool,
}

struct Context<'a> {
    systems: &'a [CorpusSystem],
    engines: &'a [KlEngine<'a>],
    records: Vec<Record>,
}

impl Context<'_> {
    fn interval(&self, inst: Instance) -> &BruhatInterval {
        &self.records[inst.record].interval
    }

    fn value(&self, inst: Instance, family: Family) -> Result<IntPolynomial, HarnessError> {
        let rec = &self.records[inst.record];
        let kl = &self.engines[rec.system];
        let (u, v) = (rec.interval.bottom(), rec.interval.top());
        Ok(match family {
            Family::R(x) => kl.parabolic_r_poly(u, v, ParabolicContext::new(inst.j, x))?,
            Family::P(x) => kl.parabolic_p_poly(u, v, ParabolicContext::new(inst.j, x))?,
        })
    }

    fn instance_ref(&self, inst: Instance) -> InstanceRef {
        let rec = &self.records[inst.record];
        let cs = &self.systems[rec.system];
        InstanceRef {
            system: cs.label.clone(),
            u: cs.sys.word_string(rec.interval.bottom()),
            v: cs.sys.word_string(rec.interval.top()),
            j: inst.j.to_string(),
        }
    }

    fn source_ok(&self, check: CheckId, inst: Instance, class: &Class) -> bool {
        let rec = &self.records[inst.record];
        match check {
            CheckId::LowerIntervals => rec.lower,
            CheckId::ShortEdgeIntervals => rec.short_edge,
            CheckId::CoelementaryIntervals => rec.type_a && class.coelementary,
            _ => true,
        }
    }

    fn target_ok(&self, check: CheckId, inst: Instance) -> bool {
        let rec = &self.records[inst.record];
        match check {
            CheckId::LowerIntervals => rec.lower,
            CheckId::CoelementaryIntervals => rec.type_a,
            _ => true,
        }
    }

    fn instances(&self, record: usize, ordinary_only: bool) -> Vec<Instance> {
        let rec = &self.records[record];
        let sys = &self.systems[rec.system].sys;
        let (u, v) = (rec.interval.bottom(), rec.interval.top());
        if ordinary_only {
            return vec![Instance { record, j: GeneratorSet::EMPTY }];
        }
        GeneratorSet::all_subsets(sys.rank())
            .filter(|&j| sys.is_min_coset_rep(u, j) && sys.is_min_coset_rep(v, j))
            .map(|j| Instance { record, j })
            .collect()
    }
}

fn quotient_subset_count(cs: &CorpusSystem, u: coxkl::Element, v: coxkl::Element) -> u64 {
    GeneratorSet::all_subsets(cs.sys.rank())
        .filter(|&j| cs.sys.is_min_coset_rep(u, j) && cs.sys.is_min_coset_rep(v, j))
        .count() as u64
}

/// Runs the requested invariance checks over the intervals of all systems.
pub fn run_invariance_checks(
    checks: &[CheckId],
    systems: &[CorpusSystem],
    engines: &[KlEngine<'_>],
    size_cap: usize,
) -> Result<Vec<CheckReport>, HarnessError> {
    let plans: Vec<(CheckId, Plan)> = checks.iter().map(|&c| (c, plan(c))).collect();
    run_plans(&plans, systems, engines, size_cap)
}

fn run_plans(
    plans: &[(CheckId, Plan)],
    systems: &[CorpusSystem],
    engines: &[KlEngine<'_>],
    size_cap: usize,
) -> Result<Vec<CheckReport>, HarnessError> {
    let need_graph = plans.iter().any(|(c, _)| *c == CheckId::ShortEdgeIntervals);
    let mut records = Vec::new();
    let mut oversize = Vec::new();
    for (k, cs) in systems.iter().enumerate() {
        let built: Vec<Result<Result<Record, Oversize>, HarnessError>> = cs
            .pairs
            .par_iter()
            .map(|&(u, v)| match build_interval_with_limit(&cs.sys, u, v, need_graph, Some(size_cap)) {
                Ok(interval) => {
                    let type_a = cs.is_type_a();
                    Ok(Ok(Record {
                        system: k,
                        lower: interval.is_lower(),
                        short_edge: need_graph && is_short_edge(&interval)?,
                        type_a,
                        cosimple: type_a && is_cosimple(&cs.sys, &interval)?,
                        interval,
                    }))
                }
                Err(Error::IntervalTooLarge { .. }) => Ok(Err(Oversize {
                    height: cs.sys.length(v) - cs.sys.length(u),
                    subsets: quotient_subset_count(cs, u, v),
                })),
                Err(e) => Err(e.into()),
            })
            .collect();
        for b in built {
            match b? {
                Ok(r) => records.push(r),
                Err(o) => oversize.push(o),
            }
        }
    }

    let mut buckets: BTreeMap<Fingerprint, Vec<usize>> = BTreeMap::new();
    for (i, r) in records.iter().enumerate() {
        buckets.entry(poset_fingerprint(r.interval.poset())).or_default().push(i);
    }
    let ctx = Context { systems, engines, records };
    let buckets: Vec<Vec<usize>> = buckets.into_values().collect();
    let parts: Vec<Result<Vec<CheckReport>, HarnessError>> = buckets
        .par_iter()
        .map(|members| {
            let classes = classify(&ctx, members)?;
            plans.iter().map(|(check, plan)| run_bucket(&ctx, *check, plan, members, &classes)).collect()
        })
        .collect();

    let mut totals: Vec<CheckReport> = plans.iter().map(|(c, _)| CheckReport::new(*c)).collect();
    for part in parts {
        for (total, r) in totals.iter_mut().zip(part?) {
            total.absorb(r);
        }
    }
    let mut by_height: BTreeMap<u32, u64> = BTreeMap::new();
    let mut by_height_ordinary: BTreeMap<u32, u64> = BTreeMap::new();
    for o in &oversize {
        *by_height.entry(o.height).or_default() += o.subsets;
        *by_height_ordinary.entry(o.height).or_default() += 1;
    }
    for (total, (_, plan)) in totals.iter_mut().zip(plans) {
        let counts = if plan.ordinary_only { &by_height_ordinary } else { &by_height };
        total.skipped += counts.values().map(|&n| n * n.saturating_sub(1)).sum::<u64>();
        if !oversize.is_empty() {
            total.notes.push(format!("{} intervals above the size cap {size_cap}", oversize.len()));
        }
        for (kind, _) in &plan.comparisons {
            if !total.hypotheses.iter().any(|h| h.kind == kind.name()) {
                total.hypotheses.push(HypothesisCount { kind: kind.name().into(), pairs: 0 });
            }
        }
    }
    Ok(totals)
}

fn classify(ctx: &Context<'_>, members: &[usize]) -> Result<Vec<Class>, HarnessError> {
    let mut classes: Vec<Class> = Vec::new();
    'next: for &m in members {
        let interval = &ctx.records[m].interval;
        for class in &mut classes {
            let rep = &ctx.records[class.members[0]].interval;
            if let Some(w) = find_isomorphisms(interval, rep, Constraint::None, 1)?.into_iter().next() {
                class.members.push(m);
                class.psi.push(w.mapping);
                continue 'next;
            }
        }
        let poset = interval.poset();
        let blank = vec![0; poset.len()];
        let auts = poset_isomorphisms(poset, &blank, poset, &blank, AUTOMORPHISM_CAP + 1);
        classes.push(Class {
            members: vec![m],
            psi: vec![(0..poset.len()).collect()],
            automorphisms: (auts.len() <= AUTOMORPHISM_CAP).then_some(auts),
            coelementary: false,
        });
    }
    for class in &mut classes {
        class.coelementary = class.members.iter().any(|&m| ctx.records[m].type_a && ctx.records[m].cosimple);
    }
    Ok(classes)
}

/// Group labels of the instances of one class under `kind`.
fn group_labels(
    ctx: &Context<'_>,
    class: &Class,
    instances: &[(usize, Instance)],
    kind: KeyKind,
) -> Result<Vec<usize>, HarnessError> {
    if kind == KeyKind::Isomorphic {
        return Ok(vec![0; instances.len()]);
    }
    let subset = |inst: Instance| -> Vec<usize> {
        let interval = ctx.interval(inst);
        match kind {
            KeyKind::Atoms => atoms_in_quotient_local(interval, inst.j),
            _ => (0..interval.len()).filter(|&i| interval.in_quotient(i, inst.j)).collect(),
        }
    };
    let mut labels = Vec::with_capacity(instances.len());
    match &class.automorphisms {
        Some(auts) => {
            let mut keys: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
            for &(k, inst) in instances {
                let image: Vec<usize> = subset(inst).into_iter().map(|i| class.psi[k][i]).collect();
                let key = auts
                    .iter()
                    .map(|sigma| {
                        let mut s: Vec<usize> = image.iter().map(|&i| sigma[i]).collect();
                        s.sort_unstable();
                        s
                    })
                    .min()
                    .unwrap_or_default();
                let next = keys.len();
                labels.push(*keys.entry(key).or_insert(next));
            }
        }
        None => {
            let mut reps: Vec<Instance> = Vec::new();
            for &(_, inst) in instances {
                let mut label = None;
                for (g, &r) in reps.iter().enumerate() {
                    let c = kind.constraint(r.j, inst.j);
                    if !find_isomorphisms(ctx.interval(r), ctx.interval(inst), c, 1)?.is_empty() {
                        label = Some(g);
                        break;
                    }
                }
                labels.push(label.unwrap_or_else(|| {
                    reps.push(inst);
                    reps.len() - 1
                }));
            }
        }
    }
    Ok(labels)
}

fn run_bucket(
    ctx: &Context<'_>,
    check: CheckId,
    plan: &Plan,
    members: &[usize],
    classes: &[Class],
) -> Result<CheckReport, HarnessError> {
    let mut report = CheckReport::new(check);
    let (mut s_all, mut t_all, mut b_all) = (0u64, 0u64, 0u64);
    let mut per_class = Vec::with_capacity(classes.len());
    for class in classes {
        let mut instances = Vec::new();
        let mut flags = Vec::new();
        for (k, &m) in class.members.iter().enumerate() {
            for inst in ctx.instances(m, plan.ordinary_only) {
                let (s, t) = (ctx.source_ok(check, inst, class), ctx.target_ok(check, inst));
                s_all += s as u64;
                t_all += t as u64;
                b_all += (s && t) as u64;
                instances.push((k, inst));
                flags.push((s, t));
            }
        }
        per_class.push((instances, flags));
    }
    debug_assert_eq!(members.len(), classes.iter().map(|c| c.members.len()).sum::<usize>());
    report.examined = s_all * t_all - b_all;

    for (kind, families) in &plan.comparisons {
        let mut held = 0u64;
        for (class, (instances, flags)) in classes.iter().zip(&per_class) {
            if !flags.iter().any(|f| f.0) {
                continue;
            }
            let labels = group_labels(ctx, class, instances, *kind)?;
            let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for (i, &g) in labels.iter().enumerate() {
                groups.entry(g).or_default().push(i);
            }
            for group in groups.values() {
                let s = group.iter().filter(|&&i| flags[i].0).count() as u64;
                let t = group.iter().filter(|&&i| flags[i].1).count() as u64;
                let b = group.iter().filter(|&&i| flags[i].0 && flags[i].1).count() as u64;
                let pairs = s * t - b;
                held += pairs;
                if pairs == 0 {
                    continue;
                }
                for &family in families {
                    let values = group
                        .iter()
                        .map(|&i| ctx.value(instances[i].1, family))
                        .collect::<Result<Vec<_>, _>>()?;
                    if values.iter().all(|v| v == &values[0]) {
                        continue;
                    }
                    for (a, &ia) in group.iter().enumerate() {
                        for (b, &ib) in group.iter().enumerate() {
                            if a == b || !flags[ia].0 || !flags[ib].1 || values[a] == values[b] {
                                continue;
                            }
                            report.violations.push(violation(
                                ctx,
                                *kind,
                                family,
                                instances[ia].1,
                                instances[ib].1,
                                [values[a].clone(), values[b].clone()],
                            )?);
                        }
                    }
                }
            }
        }
        report.hypotheses.push(HypothesisCount { kind: kind.name().into(), pairs: held });
    }
    Ok(report)
}

fn violation(
    ctx: &Context<'_>,
    kind: KeyKind,
    family: Family,
    a: Instance,
    b: Instance,
    values: [IntPolynomial; 2],
) -> Result<Violation, HarnessError> {
    let (ia, ib) = (ctx.interval(a), ctx.interval(b));
    let witness = find_isomorphisms(ia, ib, kind.constraint(a.j, b.j), 1)?;
    let sa = &ctx.systems[ctx.records[a.record].system].sys;
    let sb = &ctx.systems[ctx.records[b.record].system].sys;
    let mapping = witness
        .first()
        .map(|w| w.pairs(ia, ib).into_iter().map(|(x, y)| (sa.word_string(x), sb.word_string(y))).collect())
        .unwrap_or_default();
    let (name, x) = match family {
        Family::R(x) => ("R", x),
        Family::P(x) => ("P", x),
    };
    let source = ctx.instance_ref(a);
    Ok(Violation {
        system: source.system,
        u: source.u,
        v: source.v,
        j: Some(source.j),
        x: Some(x.name().to_string()),
        family: Some(name.to_string()),
        detail: format!("{name} differs across a {} isomorphism", kind.name()),
        polynomials: values.to_vec(),
        partner: Some(ctx.instance_ref(b)),
        mapping,
    })
}
