mod common;

use std::path::PathBuf;

use common::load;
use geoprove::report::{prove_source, ProveOptions};

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Compares with the stored file; `GOLDEN_UPDATE=1` rewrites it.
fn check(name: &str, actual: &str) {
    let path = golden(name);
    if std::env::var_os("GOLDEN_UPDATE").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path).unwrap();
    assert_eq!(actual, want, "{} differs", path.display());
}

#[test]
fn orthocenter_report_body() {
    let r = prove_source(&load("examples", "orthocenter.gp"), &ProveOptions::default()).unwrap();
    check("orthocenter_report.txt", &r.body_text());
}

#[test]
fn simson_report_body() {
    let r = prove_source(&load("examples", "simson.gp"), &ProveOptions::default()).unwrap();
    let body = r.body_text();
    assert_eq!(body.matches(" != 0    (").count(), 6);
    check("simson_report.txt", &body);
}

#[test]
fn orthocenter_certificate() {
    let r = prove_source(&load("examples", "orthocenter.gp"), &ProveOptions::default()).unwrap();
    let json = serde_json::to_string_pretty(r.result.certificate.as_ref().unwrap()).unwrap();
    check("orthocenter_certificate.json", &(json + "\n"));
}
