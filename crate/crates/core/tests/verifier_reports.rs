use tracelab_core::verifier::{self, Status, SuiteConfig};

fn small() -> SuiteConfig {
    SuiteConfig {
        frobenius_bound: 8,
        trials: 20,
        decomposition_samples: 50,
        oracle_instances: 20,
        pir_steps: 4,
        syzygy_steps: 3,
        ..SuiteConfig::default()
    }
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    let config = small();
    let many = serde_json::to_string(&verifier::run_all(&config)).unwrap();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let one = pool.install(|| serde_json::to_string(&verifier::run_all(&config)).unwrap());
    assert_eq!(many, one);
    let again = serde_json::to_string(&verifier::run_all(&config)).unwrap();
    assert_eq!(many, again);
}

#[test]
fn seed_changes_random_suites_only() {
    let a = small();
    let b = SuiteConfig { seed: 17, ..small() };
    let ra = verifier::run("matrix_lemma", &a).unwrap();
    let rb = verifier::run("matrix_lemma", &b).unwrap();
    assert!(ra.passed() && rb.passed());
    assert_eq!(ra.instances, rb.instances);
    let da = verifier::run("dvr", &a).unwrap();
    let db = verifier::run("dvr", &b).unwrap();
    assert_eq!(serde_json::to_string(&da).unwrap(), serde_json::to_string(&db).unwrap());
}

#[test]
fn guard_marks_suite_skipped() {
    let config = SuiteConfig {
        frobenius_bound: 31,
        ..small()
    };
    let report = verifier::run("gorenstein", &config).unwrap();
    assert_eq!(report.status, Status::Skipped);
    assert!(report.skipped.as_deref().unwrap().contains("enumeration bound"));
    let all = verifier::VerificationReport {
        config: config.clone(),
        suites: vec![report],
    };
    assert!(all.passed());
}

#[test]
fn unknown_suite() {
    assert!(verifier::run("nope", &SuiteConfig::default()).is_none());
}

#[test]
fn report_round_trips_through_json() {
    let report = verifier::run("koszul", &small()).unwrap();
    let text = serde_json::to_string(&report).unwrap();
    let back: verifier::SuiteReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back.id, report.id);
    assert_eq!(back.failures, report.failures);
    assert_eq!(back.status, Status::Pass);
}
