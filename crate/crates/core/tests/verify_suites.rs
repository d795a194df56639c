use gpc_core::verify::{run, VerifyBounds, SUITES};
use gpc_core::Limits;

#[test]
fn every_suite_passes_at_default_bounds() {
    let bounds = VerifyBounds::default();
    let mut failed = Vec::new();
    for id in SUITES {
        let report = run(id, &bounds, &Limits::default()).unwrap();
        print!("{report}");
        assert!(report.instances_checked > 0, "{id} checked nothing");
        if !report.passed() {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failing suites: {failed:?}");
}

#[test]
fn unknown_suite_is_an_error() {
    assert!(run("lemma99", &VerifyBounds::default(), &Limits::default()).is_err());
}
