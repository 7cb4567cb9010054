//! Running a campaign end to end.

use coxkl::KlEngine;

use crate::corpus::CorpusSystem;
use crate::identities::run_identity_check;
use crate::invariance::run_invariance_checks;
use crate::remark::reproduce_remark;
use crate::report::{CampaignReport, CheckReport, Violation, SCHEMA_VERSION};
use crate::spec::{CampaignSpec, CheckId};
use crate::HarnessError;

/// Runs every check of `spec` on a pool of `spec.parallelism` workers. The
/// report does not depend on the number of workers.
pub fn run_campaign(spec: &CampaignSpec) -> Result<CampaignReport, HarnessError> {
    spec.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.parallelism)
        .build()
        .map_err(|e| HarnessError::Config(e.to_string()))?;
    pool.install(|| run(spec))
}

fn run(spec: &CampaignSpec) -> Result<CampaignReport, HarnessError> {
    let mut checks: Vec<CheckId> = Vec::new();
    for &c in &spec.checks {
        if !checks.contains(&c) {
            checks.push(c);
        }
    }
    let systems = spec
        .systems
        .iter()
        .map(|entry| CorpusSystem::build(entry, spec))
        .collect::<Result<Vec<_>, _>>()?;
    let engines: Vec<KlEngine<'_>> = systems.iter().map(|cs| KlEngine::new(&cs.sys)).collect();

    let invariance: Vec<CheckId> = checks.iter().copied().filter(|c| c.is_invariance()).collect();
    let mut invariance_reports = if invariance.is_empty() {
        Vec::new()
    } else {
        run_invariance_checks(&invariance, &systems, &engines, spec.max_interval_size)?
    }
    .into_iter();

    let mut reports = Vec::new();
    let mut remark = None;
    for &check in &checks {
        let report = if check.is_invariance() {
            invariance_reports.next().expect("one report per invariance check")
        } else if check == CheckId::BooleanCounterexample {
            let mut r = CheckReport::new(check);
            r.examined = 1;
            match reproduce_remark() {
                Ok(record) => remark = Some(record),
                Err(e) => r.violations.push(Violation::simple("A3", "e".into(), "1,2,3".into(), e.to_string())),
            }
            r
        } else {
            let mut total = CheckReport::new(check);
            for (cs, kl) in systems.iter().zip(&engines) {
                total.absorb(run_identity_check(check, cs, kl, spec.max_interval_size)?);
            }
            total
        };
        reports.push(report);
    }
    let total_violations = reports.iter().map(|r| r.violations.len()).sum();
    Ok(CampaignReport {
        schema_version: SCHEMA_VERSION,
        campaign: spec.name.clone(),
        max_interval_size: spec.max_interval_size,
        corpus: systems.iter().map(CorpusSystem::entry).collect(),
        checks: reports,
        remark,
        total_violations,
    })
}
