use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_steiner-ecc"));
    cmd.env_remove("STEINER_ECC_CAP");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const SPIDER_222: &str = "0 1\n1 2\n0 3\n3 4\n0 5\n5 6\n";

#[test]
fn compute_path_and_spider() {
    let dir = tempfile::tempdir().unwrap();
    let path7 = write(dir.path(), "p7.txt", "0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n");
    let out = run(&["compute", "--input", &path7]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("aecc3: 6/1 (6.000000)"));

    let spider = write(dir.path(), "s.txt", SPIDER_222);
    let out = run(&["compute", "--input", &spider, "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["aecc3"], "37/7");
    assert_eq!(v["segment_sequence"], serde_json::json!([2, 2, 2]));
    assert_eq!(v["ecc3"], serde_json::json!([4, 5, 6, 5, 6, 5, 6]));
}

#[test]
fn malformed_input_names_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "0 1\n1 2 3\n");
    let out = run(&["compute", "--input", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));

    let cyclic = write(dir.path(), "cyc.txt", "0 1\n1 2\n2 0\n");
    assert_eq!(run(&["compute", "--input", &cyclic]).status.code(), Some(2));
}

#[test]
fn exactly_one_input_source() {
    let out = run(&["compute", "--prufer", "0,0", "--random", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(run(&["compute"]).status.code(), Some(2));
}

#[test]
fn construct_then_compute_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("cat.txt");
    let out = run(&["construct", "caterpillar", "--pi", "3,3,2,1,1,1,1", "--output", file.to_str().unwrap()]);
    assert!(out.status.success());
    let out = run(&["compute", "--input", file.to_str().unwrap()]);
    assert!(stdout(&out).contains("aecc3: 32/7"));
    assert!(stdout(&out).contains("n: 7"));
}

#[test]
fn construct_balanced_star() {
    let out = run(&["construct", "balanced-star", "--n", "7", "--m", "3"]);
    assert!(out.status.success());
    let edges = stdout(&out);
    let mut child = bin().args(["compute", "--input", "-"]).stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped()).spawn().unwrap();
    use std::io::Write;
    child.stdin.take().unwrap().write_all(edges.as_bytes()).unwrap();
    let res = child.wait_with_output().unwrap();
    let text = stdout(&res);
    assert!(text.contains("segment sequence: (2,2,2)"));
    assert!(text.contains("aecc3: 37/7"));
}

#[test]
fn infeasible_construction_exits_3() {
    let out = run(&["construct", "cnk", "--n", "7", "--k", "3"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(run(&["construct", "balanced-star", "--n", "4", "--m", "4"]).status.code(), Some(3));
}

#[test]
fn sigma_reduce_random_tree_is_reproducible() {
    let args = ["transform", "sigma-reduce", "--random", "9", "--seed", "0", "--format", "json"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["final_is_caterpillar"], true);
    assert_eq!(v["source"], "random n=9 seed=0");
    let steps = v["steps"].as_array().unwrap();
    for s in steps {
        assert_eq!(s["move"]["kind"], "sigma");
    }
}

#[test]
fn transform_chain_reports_each_step() {
    let dir = tempfile::tempdir().unwrap();
    let s411 = write(dir.path(), "s411.txt", "0 1\n1 2\n2 3\n3 4\n0 5\n0 6\n");
    let out = run(&["transform", "balance", "--input", &s411]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("step 1: rebalance"));
    assert!(text.contains("aecc3 38/7 -> 38/7"));
    assert!(text.contains("step 2: rebalance"));
    assert!(text.contains("aecc3 38/7 -> 37/7  cumulative -1/7"));
}

#[test]
fn transform_errors_exit_4() {
    let dir = tempfile::tempdir().unwrap();
    let spider = write(dir.path(), "s.txt", SPIDER_222);
    assert_eq!(run(&["transform", "rebalance", "--input", &spider]).status.code(), Some(4));
    let h = write(dir.path(), "h.txt", "0 1\n0 3\n0 2\n2 4\n4 5\n4 6\n");
    assert_eq!(run(&["transform", "balance", "--input", &h]).status.code(), Some(4));
    assert_eq!(run(&["transform", "sigma", "--input", &spider, "--site-index", "99"]).status.code(), Some(4));
}

#[test]
fn verify_segment_claim_as_json() {
    let out = run(&["verify", "--theorem", "thm1_2", "--n", "8", "--format", "json"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["trees_examined"], 23);
    for c in v["classes"].as_array().unwrap() {
        assert_ne!(c["status"], "fail");
    }
}

#[test]
fn verify_all_text_summary() {
    let out = run(&["verify", "--n", "7"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().filter(|l| l.contains(" n=7: pass")).count(), 11);
}

#[test]
fn verify_random_universe() {
    let out = run(&["verify", "--theorem", "sigma_mono", "--random-trees", "30", "--max-n", "20", "--format", "csv"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("claim,n,key,value,class_size,status\n"));
}

#[test]
fn cap_is_enforced_with_exit_6() {
    assert_eq!(run(&["verify", "--n", "13", "--theorem", "thm1_1"]).status.code(), Some(6));
    let out = bin().args(["enumerate", "--n", "6"]).env("STEINER_ECC_CAP", "5").output().unwrap();
    assert_eq!(out.status.code(), Some(6));
    let out = bin().args(["enumerate", "--n", "6", "--cap", "6"]).env("STEINER_ECC_CAP", "5").output().unwrap();
    assert!(out.status.success());
}

#[test]
fn enumerate_grouped_by_segment_count() {
    let out = run(&["enumerate", "--n", "10", "--group", "segment_count", "--format", "csv"]);
    assert!(out.status.success());
    let total: usize = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().parse::<usize>().unwrap())
        .sum();
    assert_eq!(total, 106);
    let out = run(&["enumerate", "--n", "5", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], 3);
}

#[test]
fn bound_and_majorize() {
    let out = run(&["bound", "--pi", "3,3,2,1,1,1,1"]);
    assert!(stdout(&out).contains("32/7"));
    let out = run(&["bound", "--family", "max-degree-with-count", "--n", "10", "--delta", "4", "--k", "2"]);
    assert!(stdout(&out).contains("28/5"));
    assert_eq!(run(&["bound", "--family", "max-degree-count", "--n", "7", "--k", "3"]).status.code(), Some(3));

    let out = run(&["majorize", "3,2,2,1,1,1", "2,2,2,2,1,1"]);
    let text = stdout(&out);
    assert!(text.contains("(3,2,2,1,1,1) majorizes (2,2,2,2,1,1): yes"));
    assert!(text.contains("(2,2,2,2,1,1) majorizes (3,2,2,1,1,1): no"));
    assert_eq!(run(&["majorize", "3,1", "2,1,1"]).status.code(), Some(2));
}

#[test]
fn unknown_claim_is_a_usage_error() {
    assert_eq!(run(&["verify", "--theorem", "nonsense", "--n", "5"]).status.code(), Some(2));
}
