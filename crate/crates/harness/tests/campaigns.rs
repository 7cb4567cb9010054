use coxkl_harness::{run_campaign, CampaignSpec, CheckId, SystemEntry};

fn spec(systems: &[&str], checks: &[CheckId]) -> CampaignSpec {
    CampaignSpec::new(systems.iter().map(|s| SystemEntry::named(s)).collect(), checks.to_vec())
}

#[test]
fn deodhar_sums_on_a3() {
    let report = run_campaign(&spec(&["A3"], &[CheckId::DeodharSums])).unwrap();
    let c = report.check(CheckId::DeodharSums).unwrap();
    assert!(c.examined > 0);
    assert!(c.violations.is_empty());
}

#[test]
fn remark_record_is_reported() {
    let report = run_campaign(&spec(&["A2"], &[CheckId::BooleanCounterexample])).unwrap();
    let r = report.remark.as_ref().unwrap();
    assert_eq!(r.atom_counts, (2, 2));
    let json = report.to_json();
    assert!(json.contains("\"p_J1_xminus1\": [\n      1\n    ]"));
}

#[test]
fn monotonicity_on_b3_covers_all_subsets() {
    let report = run_campaign(&spec(&["B3"], &[CheckId::QuotientMonotonicity])).unwrap();
    let c = report.check(CheckId::QuotientMonotonicity).unwrap();
    assert_eq!(c.examined, report.corpus[0].comparable_pairs as u64 * 8);
    assert!(c.violations.is_empty());
}

#[test]
fn reports_do_not_depend_on_parallelism() {
    let mut s = spec(
        &["A3", "B2"],
        &[CheckId::CicParabolicAtoms, CheckId::ShortEdgeIntervals, CheckId::KlDefinitionAudit],
    );
    let one = run_campaign(&s).unwrap().to_json();
    s.parallelism = 4;
    assert_eq!(run_campaign(&s).unwrap().to_json(), one);
}

#[test]
fn height_bounds_restrict_the_corpus() {
    let mut s = spec(&["A3"], &[CheckId::W0Duality]);
    s.systems[0].max_interval_height = Some(1);
    let report = run_campaign(&s).unwrap();
    assert_eq!(report.corpus[0].max_interval_height, Some(1));
    assert_eq!(report.corpus[0].comparable_pairs, 24 + 58);
}

#[test]
fn capped_affine_system_skips_duality() {
    let text = r#"
        checks = ["w0-duality", "deodhar-sums", "lower-intervals"]
        [[systems]]
        type = "matrix"
        label = "affine-A2"
        matrix = [[1, 3, 3], [3, 1, 3], [3, 3, 1]]
        length_cap = 5
    "#;
    let report = run_campaign(&CampaignSpec::parse(text).unwrap()).unwrap();
    let duality = report.check(CheckId::W0Duality).unwrap();
    assert_eq!(duality.examined, 0);
    assert_eq!(duality.skipped, report.corpus[0].comparable_pairs as u64);
    assert_eq!(report.total_violations, 0);
}

#[test]
fn corpus_checksums_are_stable() {
    let a = run_campaign(&spec(&["A3"], &[CheckId::W0Duality])).unwrap();
    let b = run_campaign(&spec(&["A3"], &[CheckId::OrdinarySanity])).unwrap();
    assert_eq!(a.corpus, b.corpus);
    assert_eq!(a.corpus[0].system_checksum.len(), 64);
}
