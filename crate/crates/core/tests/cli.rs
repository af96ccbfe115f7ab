mod common;

use std::process::Command;

use common::corpus_dir;

fn geoprove(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_geoprove")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn example(name: &str) -> String {
    corpus_dir("examples").join(name).to_string_lossy().into_owned()
}

#[test]
fn midsegment_proves() {
    let (code, out) = geoprove(&["prove", &example("midsegment.gp"), "--method", "wu", "--pin", "B,C", "--pin-axis", "x"]);
    assert_eq!(code, 0);
    assert!(out.contains("Final remainder of g1: 0"));
    assert!(out.contains("no non-degeneracy conditions"));
}

#[test]
fn orthocenter_json() {
    let (code, out) = geoprove(&["prove", &example("orthocenter.gp"), "--report", "json", "--verify-certificate"]);
    assert_eq!(code, 0);
    let r = geoprove::report::Report::from_json(&out).unwrap();
    assert!(r.result.verdict.is_proved());
    assert_eq!(r.certificate_verified, Some(true));
    let readings: Vec<String> =
        r.result.ndgs.iter().filter_map(|n| n.geometric.as_ref().map(|g| g.to_string())).collect();
    assert!(readings.contains(&"A ≢ B".to_string()));
}

#[test]
fn groebner_method() {
    let (code, out) = geoprove(&["prove", &example("simson.gp"), "--method", "groebner", "--ndg-mode", "wu"]);
    assert_eq!(code, 0, "{out}");
    let (code, _) = geoprove(&["prove", &example("midsegment.gp"), "--method", "groebner", "--ndg-mode", "none"]);
    assert_eq!(code, 0);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let broken = dir.path().join("broken.gp");
    std::fs::write(&broken, "point A free\npoint B midpoint A\n").unwrap();
    assert_eq!(geoprove(&["prove", broken.to_str().unwrap()]).0, 3);
    assert_eq!(geoprove(&["prove", "/nonexistent.gp"]).0, 3);
    assert_eq!(geoprove(&["prove", &example("midsegment.gp"), "--pin", "Q,R"]).0, 3);

    let false_goal = dir.path().join("false.gp");
    std::fs::write(&false_goal, "point A free\npoint B free\npoint C free\nprove collinear A B C\n").unwrap();
    assert_eq!(geoprove(&["prove", false_goal.to_str().unwrap()]).0, 1);

    let pascal = corpus_dir("chou").join("ex006_pascal.gp");
    let (code, out) = geoprove(&["prove", pascal.to_str().unwrap(), "--method", "groebner", "--timeout", "0.2"]);
    assert_eq!(code, 2, "{out}");
}

#[test]
fn out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.txt");
    let (code, out) = geoprove(&["prove", &example("orthocenter.gp"), "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert!(std::fs::read_to_string(path).unwrap().contains("-u2*u1*x1 - u3^2*u1 + u3*u1^2"));
}

#[test]
fn bench_examples() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("t.csv");
    let (code, out) = geoprove(&["bench", corpus_dir("examples").to_str().unwrap(), "--csv", csv.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    let text = std::fs::read_to_string(csv).unwrap();
    assert!(text.starts_with("name,verdict,final_remainder_ms,triangulation_ms,total_ms"));
    assert_eq!(text.lines().filter(|l| l.contains(",proved,")).count(), 4);

    let empty = tempfile::tempdir().unwrap();
    assert_eq!(geoprove(&["bench", empty.path().to_str().unwrap()]).0, 0);
}
