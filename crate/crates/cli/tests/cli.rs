use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_possibilist")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn fx(name: &str) -> String {
    fixture(name).display().to_string()
}

#[test]
fn valid_excluded_middle() {
    let o = run(&["valid", "p | !p"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "VALID\n");
}

#[test]
fn invalid_prints_countermodel() {
    let o = run(&["valid", "!(p & !p)"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.starts_with("INVALID\ncountermodel:\n"), "{out}");
    assert!(out.contains("  !(p & !p)=0\n"), "{out}");
    assert_eq!(code(&run(&["valid", "!(p & !p)", "--logic", "classical"])), 0);
}

#[test]
fn entail_witness() {
    let o = run(&["entail", &fx("witness.pkb"), "!glasses"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "ACCEPT N=1 N_neg=1/2 N_badly=1/2\n");
    let o = run(&["entail", &fx("witness.pkb"), "BMW"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("REJECT"));
}

#[test]
fn c1_entail_inline_and_file() {
    assert_eq!(code(&run(&["c1-entail", "--premises", "p", "p -> q", "--", "q"])), 0);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("premises.txt");
    std::fs::write(&path, "p  # a fact\np -> q\n").unwrap();
    assert_eq!(code(&run(&["c1-entail", "--premises", path.to_str().unwrap(), "--", "q"])), 0);
    assert_eq!(code(&run(&["c1-entail", "--premises", path.to_str().unwrap(), "--", "!q"])), 1);
}

#[test]
fn closure_tsv() {
    let o = run(&["--format", "tsv", "closure", &fx("witness.pkb"), "--queries", &fx("queries.txt")]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "query\tN\tN_neg\tN_badly\tverdict");
    assert!(lines.contains(&"glasses\t1/2\t1\t1/2\tREJECT"), "{out}");
    assert!(lines.contains(&"female\t1\t0\t0\tACCEPT"), "{out}");
    assert_eq!(lines.len(), 6);
}

#[test]
fn fuse_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fused.pkb");
    let o = run(&["fuse", &fx("w1.pkb"), &fx("w2.pkb"), "-o", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let a = run(&["closure", out.to_str().unwrap()]);
    let b = run(&["closure", &fx("witness.pkb")]);
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(code(&run(&["entail", out.to_str().unwrap(), "!glasses"])), 0);
}

#[test]
fn defaults_and_ranks() {
    let o = run(&["defaults", &fx("penguin.defaults"), "!fly"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("dropped: fly => !live-in-Antarctica"));
    assert_eq!(code(&run(&["defaults", &fx("penguin.defaults"), "!live-in-Antarctica"])), 1);
    let o = run(&["--format", "tsv", "zrank", &fx("birds.defaults")]);
    assert_eq!(stdout(&o), "0\t1/3\tbird => fly\n0\t1/3\tbird => wings\n1\t2/3\tpenguin => bird\n1\t2/3\tpenguin => !fly\n");
}

#[test]
fn classical_only_verbs() {
    let o = run(&["incons", &fx("drowning.pkb")]);
    assert_eq!((code(&o), stdout(&o)), (0, "Incons=1/3\n".to_string()));
    assert_eq!(code(&run(&["incons", &fx("witness.pkb")])), 2);
}

#[test]
fn input_errors_exit_2() {
    let o = run(&["valid", "p &"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("1:4"));
    assert_eq!(code(&run(&["entail", "/nonexistent.pkb", "p"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.pkb");
    std::fs::write(&bad, "logic: c1\np ; 1\nq & ; 1/2\n").unwrap();
    let o = run(&["entail", bad.to_str().unwrap(), "p"]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8_lossy(&o.stderr).to_string();
    assert!(err.contains("bad.pkb:3:"), "{err}");
}

#[test]
fn resource_bound_exits_3() {
    let o = run(&["--max-evalset", "3", "valid", "(p -> q) -> (!q -> !p)"]);
    assert_eq!(code(&o), 3);
    assert_eq!(code(&run(&["--max-atoms", "1", "valid", "p | q", "--logic", "classical"])), 3);
}

#[test]
fn reports_are_deterministic() {
    let kb = fx("witness.pkb");
    let a = run(&["check-props", &kb, "--seed", "7"]);
    let b = run(&["check-props", &kb, "--seed", "7"]);
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a), stdout(&b));
    let a = run(&["check-axioms", &kb, "--seed", "3"]);
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a), stdout(&run(&["check-axioms", &kb, "--seed", "3"])));
    assert!(stdout(&a).contains("AXIOM Taut: PASS"));
}
