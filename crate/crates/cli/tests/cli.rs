use std::path::PathBuf;
use std::process::{Command, Output};

fn opalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_opalg")).args(args).output().expect("binary runs")
}

fn script(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("scripts").join(name).display().to_string()
}

fn temp_script(name: &str, body: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.display().to_string()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

#[test]
fn passing_script_exits_zero_with_pass_status() {
    let out = opalg(&["run", &script("sl2.op"), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["status"], "pass");
    for e in v["entries"].as_array().unwrap() {
        // the parsed map sorts its keys
        let keys: Vec<_> = e.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["id", "kind", "ms", "paper_anchor", "status", "witness"]);
    }
}

#[test]
fn failing_assertion_exits_one_and_keeps_its_anchor() {
    let path = temp_script("bad.op", "let H = 4*x*dx;\nlet E = 2*sqrt(x*y)*dy;\nassert comm(H, E) == 3*E;\n");
    let out = opalg(&["run", &path, "--format", "json", "--exact-only"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["status"], "fail");
    assert_eq!(v["entries"][0]["paper_anchor"], "script line 3");
    assert_eq!(v["entries"][0]["witness"], "dy: 4*sqrt(x*y) vs 6*sqrt(x*y)");
}

#[test]
fn syntax_errors_exit_two_with_position() {
    let path = temp_script("syntax.op", "let H = 4*x*dx;\nassert H = H;\n");
    let out = opalg(&["run", &path]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("syntax.op:2:10: expected one of `==`, `!=`"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(opalg(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(opalg(&["lattice"]).status.code(), Some(2));
    assert_eq!(opalg(&["lattice", "--n", "1", "--set", "delta=1"]).status.code(), Some(2));
    assert_eq!(opalg(&["lattice", "--n", "1", "--parallel", "maybe"]).status.code(), Some(2));
    assert_eq!(opalg(&["run", "/nonexistent/script.op"]).status.code(), Some(2));
}

#[test]
fn construction_commands() {
    let out = opalg(&["lattice", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("PASS build-lattice(2) [lattice]\n    data: "), "{text}");

    let out = opalg(&["hw", "--n", "3/2", "--len", "4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["entries"][0]["data"]["vectors"].as_array().unwrap().len(), 4);
    assert_eq!(opalg(&["hw", "--n", "3/2"]).status.code(), Some(1));

    let out = opalg(&["ef", "--p", "p", "--w", "4", "--len", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["entries"][0]["data"]["eigenvalue"], "p^2 + 5/2*p + 3/2");
}

#[test]
fn set_specializes_parameters() {
    let out = opalg(&["lattice", "--n", "1", "--set", "alpha=2", "--set", "beta=-1/3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["entries"][0]["data"]["eigenvalue"], "-1/3");
    assert_eq!(opalg(&["lattice", "--n", "1", "--set", "alpha=0"]).status.code(), Some(1));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = ["run", &script("ladders.op"), "--format", "json", "--seed", "7"];
    let first = opalg(&args);
    let second = opalg(&args);
    let parallel = opalg(&[&args[..], &["--parallel", "on"]].concat());
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, parallel.stdout);
}
