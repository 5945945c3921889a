use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tableau-forge")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

#[test]
fn count_engines_agree() {
    let o = run(&["count", "--skew", "2,2/1", "--method", "oracle,naruse"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2");
    let o = run(&["count", "--family", "rho", "--params", "1,1,1,1,1", "--method", "formula,oracle"]);
    assert_eq!(stdout(&o), "16");
    assert_eq!(stdout(&run(&["count", "--skew", "1/", "--method", "oracle"])), "1");
    assert_eq!(stdout(&run(&["count", "--skew", "3,3,2/2,1", "--method", "oracle,naruse"])), "16");
    assert_eq!(stdout(&run(&["count", "--family", "v", "--params", "1,1,1,1", "--method", "formula,oracle"])), "2");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["count", "--skew", "2,3/"]).status.code(), Some(2));
    assert_eq!(run(&["count", "--family", "rho"]).status.code(), Some(2));
    assert_eq!(run(&["gf", "--skew", "1/", "--kind", "nope"]).status.code(), Some(2));
    let big = run(&["count", "--skew", "9,9,9/"]);
    assert_eq!(big.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_tableau-forge"))
        .args(["count", "--skew", "9,9,9/"])
        .env("TABLEAU_FORGE_CAP", "30")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn formula_outside_its_range() {
    // the V-shape hook form is not integral when n = 0 and a > 0
    let o = run(&["count", "--family", "v", "--params", "0,1,0,1", "--method", "oracle,formula"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["count", "--family", "m", "--params", "1,1,0,1,0,1", "--method", "oracle,formula"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn generating_functions() {
    assert_eq!(stdout(&run(&["gf", "--skew", "1/", "--kind", "rpp", "--trunc", "3"])), "1 + q + q^2 + q^3 (+O(q^4))");
    let o = run(&[
        "gf",
        "--family",
        "m",
        "--params",
        "1,1,0,1,0,1",
        "--kind",
        "ssyt",
        "--bounded",
        "1",
        "--engine",
        "formula",
    ]);
    assert_eq!(stdout(&o), "q + q^2");
    let o = run(&["gf", "--family", "m", "--params", "1,1,0,1,0,1", "--max-entry", "1", "--engine", "formula,oracle"]);
    assert_eq!(stdout(&o), "q + q^2");
    let o = run(&[
        "gf",
        "--family",
        "m",
        "--params",
        "1,0,0,0,0,1",
        "--trace",
        "--trunc",
        "2",
        "--engine",
        "oracle,formula",
    ]);
    assert_eq!(stdout(&o), "1 + x q + x^2 q^2 (+O(q^3))");
    let o = run(&["gf", "--skew", "3,2/1", "--trunc", "6", "--engine", "formula,oracle"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&[
        "gf",
        "--fixed-diag",
        "2",
        "--staircase",
        "1",
        "--lam",
        "1",
        "--kind",
        "rpp",
        "--trunc",
        "6",
        "--engine",
        "formula,oracle",
    ]);
    assert_eq!(stdout(&o), "q^4 + q^5 + q^6 (+O(q^7))");
}

#[test]
fn excited_listing() {
    assert_eq!(stdout(&run(&["excited", "--skew", "2,2/1", "--count"])), "2");
    assert_eq!(stdout(&run(&["excited", "--skew", "2,1/1", "--list"])), "(1,1)");
    assert_eq!(stdout(&run(&["excited", "--skew", "3,2/", "--count"])), "1");
}

fn sweep(dir: &Path, name: &str, jobs: &str) -> (Output, String) {
    let out = dir.join(name);
    let o = run(&[
        "verify",
        "thm3.1",
        "--range",
        "n=0..2",
        "--range",
        "a=1..2",
        "--range",
        "b=0..1",
        "--range",
        "c=1..2",
        "--range",
        "d=0..1",
        "--jobs",
        jobs,
        "--output",
        out.to_str().unwrap(),
    ]);
    (o, std::fs::read_to_string(out).unwrap())
}

#[test]
fn verify_reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (o1, r1) = sweep(dir.path(), "one.jsonl", "1");
    let (o4, r4) = sweep(dir.path(), "four.jsonl", "4");
    assert_eq!(o1.status.code(), Some(0), "{}", String::from_utf8_lossy(&o1.stderr));
    assert_eq!(o4.status.code(), Some(0));
    assert_eq!(r1, r4);
    assert_eq!(r1.lines().count(), 48);
    let records: Vec<serde_json::Value> = r1.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(records.iter().all(|r| r["theorem"] == "thm3.1"));
    let passed = records.iter().filter(|r| r["status"] == "pass").count();
    let invalid = records.iter().filter(|r| r["status"] == "skipped-invalid").count();
    assert_eq!(passed + invalid, 48);
    let last = records.last().unwrap();
    assert_eq!(last["params"]["n"], 2);
    assert!(last["formula"].is_string());
    assert!(stdout(&o1).contains(&format!("{passed} pass, 0 fail")));
}

#[test]
fn verify_from_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("box.conf");
    let report = dir.path().join("box.jsonl");
    std::fs::write(
        &cfg,
        format!(
            "theorem = macmahon\n# all boxes up to 3\na = 0..3\nb = 0..3\nc = 0..3\noutput = {}\n",
            report.display()
        ),
    )
    .unwrap();
    let o = run(&["verify", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&report).unwrap().lines().count(), 64);

    let o = run(&[
        "verify", "thm6.1", "--range", "n=0..1", "--range", "a=0..1", "--range", "c=0..1", "--range", "m=1..2",
        "--trunc", "8",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn verify_failures_and_config_errors() {
    let o = run(&["verify", "thm4.1-hook", "--range", "n=0..1", "--range", "a=1", "--range", "m=1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("first failure at n=0"));
    assert_eq!(run(&["verify", "thm9.9"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "thm3.1", "--range", "z=1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "thm3.1", "--range", "n=3..1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--config", "/nonexistent/file"]).status.code(), Some(2));
}

#[test]
fn timings_only_on_request() {
    let o = run(&["verify", "macmahon", "--range", "a=1", "--range", "b=1", "--range", "c=1"]);
    let line = stdout(&o).lines().next().unwrap().to_string();
    assert!(!line.contains("wall_ms"));
    let o = run(&["verify", "macmahon", "--range", "a=1", "--range", "b=1", "--range", "c=1", "--timings"]);
    assert!(stdout(&o).lines().next().unwrap().contains("wall_ms"));
}
