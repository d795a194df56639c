use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn gpc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gpc"))
        .args(args)
        .env_remove("GPC_JOBS")
        .env_remove("GPC_NODE_BUDGET")
        .env_remove("GPC_VERTEX_CAP")
        .output()
        .expect("run gpc")
}

fn json(out: &Output) -> Value {
    let text = String::from_utf8_lossy(&out.stdout);
    serde_json::from_str(text.trim()).unwrap_or_else(|e| panic!("bad JSON {text:?}: {e}"))
}

fn make(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.join(format!("{name}.json"));
    let mut full = vec!["make"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", path.to_str().unwrap()]);
    let out = gpc(&full);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn vertex_count(path: &Path) -> usize {
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    v["vertices"].as_array().unwrap().len()
}

#[test]
fn family_sizes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(vertex_count(&make(dir.path(), "kg", &["kneser", "5", "2"])), 10);
    assert_eq!(vertex_count(&make(dir.path(), "h", &["helical", "5", "1", "2"])), 75);
    assert_eq!(vertex_count(&make(dir.path(), "cox", &["coxeter"])), 28);
    assert_eq!(vertex_count(&make(dir.path(), "m4", &["mycielski", "4"])), 11);
}

#[test]
fn bad_parameters_exit_2() {
    for args in [
        &["make", "cycle"][..],
        &["make", "cycle", "2"],
        &["make", "kneser", "3", "2", "1"],
        &["make", "petersen", "1"],
        &["chi", "/nonexistent/graph.json"],
    ] {
        let out = gpc(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    }
}

#[test]
fn cube_of_c5_is_k5() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = make(dir.path(), "c5", &["cycle", "5"]);
    let k5 = make(dir.path(), "k5", &["complete", "5"]);
    let p = dir.path().join("p.json");
    let out = gpc(&["power", s(&c5), "-n", "3", "-d", "1", "-o", s(&p)]);
    assert_eq!(out.status.code(), Some(0));
    let out = gpc(&["iso", s(&p), s(&k5)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["isomorphic"], true);
    let out = gpc(&["iso", s(&c5), s(&k5)]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn hom_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = make(dir.path(), "c5", &["cycle", "5"]);
    let k3 = make(dir.path(), "k3", &["complete", "3"]);
    let out = gpc(&["hom", s(&c5), s(&k3), "--certificate"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["exists"], true);
    assert_eq!(v["map"].as_array().unwrap().len(), 5);
    let out = gpc(&["hom", s(&k3), s(&c5)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["exists"], false);
}

#[test]
fn invariants() {
    let dir = tempfile::tempdir().unwrap();
    let p = make(dir.path(), "p", &["petersen"]);
    let c5 = make(dir.path(), "c5", &["cycle", "5"]);
    assert_eq!(json(&gpc(&["chi", s(&p)]))["chi"], 3);
    let v = json(&gpc(&["chic", s(&c5)]));
    assert_eq!((v["num"].as_u64(), v["den"].as_u64()), (Some(5), Some(2)));
    assert_eq!(json(&gpc(&["oddgirth", s(&p)]))["odd_girth"], 5);
    assert_eq!(json(&gpc(&["thickness", s(&c5)]))["best_ratio"], "5/3");
    assert_eq!(json(&gpc(&["fparam", s(&c5)]))["f"], 5);
    let k4 = make(dir.path(), "k4", &["complete", "4"]);
    assert_eq!(gpc(&["colorful", s(&k4)]).status.code(), Some(0));
    let human = gpc(&["chi", s(&p), "--human"]);
    assert_eq!(String::from_utf8_lossy(&human.stdout), "chi: 3\n");
}

#[test]
fn negative_powers() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = make(dir.path(), "c5", &["cycle", "5"]);
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    assert_eq!(gpc(&["negpower", s(&c5), "-s", "1", "-o", s(&a)]).status.code(), Some(0));
    let out = gpc(&["power", s(&c5), "-n", "1", "-d", "3", "--negative", "-o", s(&b)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(gpc(&["iso", s(&a), s(&b)]).status.code(), Some(0));
    let out = gpc(&["power", s(&c5), "-n", "3", "-d", "1", "--negative"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let out = gpc(&["verify", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
    let out = gpc(&["verify", "lemma-chromc", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&out);
    assert_eq!(v["lemma_id"], "lemma-chromc");
    assert!(v["failures"].as_array().unwrap().is_empty());
    let out = gpc(&["verify", "lemma1", "--csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("lemma_id,instance,expected,got,ok"));
    assert!(lines.all(|l| l.starts_with("lemma1,") && l.ends_with(",true")));
    assert_eq!(gpc(&["verify", "lemma1", "--pool", "huge"]).status.code(), Some(2));
}

#[test]
fn dot_output() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = make(dir.path(), "c5", &["cycle", "5"]);
    let out = gpc(&["subdivide", s(&c5), "-t", "2", "--dot"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("graph"));
    assert_eq!(text.matches("--").count(), 10);
}
