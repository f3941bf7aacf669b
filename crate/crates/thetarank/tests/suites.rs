use thetarank::verify::{run_all, run_suite, suite_names, SuiteParams};
use thetarank::Error;

fn params() -> SuiteParams {
    SuiteParams::default()
}

#[test]
fn every_suite_but_the_jump_law_passes() {
    let reports = run_all(&params()).unwrap();
    assert_eq!(reports.len(), suite_names().len());
    for r in &reports {
        assert!(r.cases > 0, "{} checked nothing", r.suite);
        if r.suite != "jump-law" {
            assert!(r.passed, "{}: {:?}", r.suite, r.failures.first());
        }
    }
}

#[test]
fn jump_law_fails_only_on_unitary_groups() {
    let r = run_suite("jump-law", &params()).unwrap();
    assert!(!r.passed);
    assert_eq!(r.failed, 42);
    assert!(r.failures.iter().all(|f| f.input.starts_with("u:")), "{:?}", r.failures);
    assert!(r.failures.iter().any(|f| f.input == "u:0 [|] -> [0|1]" && f.got == "1"));
    assert_eq!(r.notes.len(), 1);
    // Only U_0 is left on the unitary side; its one bad successor is the only failure.
    let spo = run_suite("jump-law", &SuiteParams { max_udim: 0, ..params() }).unwrap();
    assert_eq!(spo.failed, 1);
}

#[test]
fn reports_serialize() {
    let r = run_suite("theta-parity", &SuiteParams { max_rank: 3, max_udim: 3, ..params() }).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["suite"], "theta-parity");
    assert_eq!(v["passed"], true);
    assert_eq!(v["bounds"]["max_rank"], 3);
    assert!(v["bounds"].get("ceiling").is_none());
    assert_eq!(r.to_tsv().split('\t').count(), 8);
}

#[test]
fn bad_requests() {
    assert!(matches!(run_suite("no-such-suite", &params()), Err(Error::UnknownSuite(_))));
    let big = SuiteParams { max_rank: 31, ..params() };
    assert!(matches!(run_suite("theta-parity", &big), Err(Error::BoundExceeded { n: 31, max: 30 })));
}

#[test]
fn notes_on_documented_gaps() {
    let r = run_suite("existence-witness", &params()).unwrap();
    assert!(r.notes.iter().any(|n| n.contains("O+_2(q)")));
    let r = run_suite("twisted-successor-min", &params()).unwrap();
    assert!(r.passed && !r.notes.is_empty());
}
