use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_distinguish"));
    c.env_remove("DISTINGUISH_JOBS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn graph_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn spider_pair_text() -> String {
    let mut lines = vec!["18 17".to_string(), "0 1".to_string()];
    let mut next = 2;
    for end in [0, 1] {
        for _ in 0..4 {
            lines.push(format!("{end} {next}"));
            lines.push(format!("{next} {}", next + 1));
            next += 2;
        }
    }
    lines.join("\n") + "\n"
}

#[test]
fn compute_path() {
    let f = graph_file("4 3\n0 1\n1 2\n2 3\n");
    let out = run(&["compute", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["D"], 2);
    assert_eq!(v["Dprime"], 2);
    assert_eq!(v["in_family_T"], false);
    assert_eq!(v["family"], "tree");
}

#[test]
fn compute_spider_pair_with_oracle() {
    let f = graph_file(&spider_pair_text());
    let out = run(&["compute", "--oracle", "--witness", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!((v["D"].as_u64(), v["Dprime"].as_u64()), (Some(2), Some(3)));
    assert_eq!(v["in_family_T"], true);
    assert_eq!(v["center"], "bicentric");
    assert_eq!(v["checked_against_oracle"], true);
    assert_eq!(v["witness_vertex"].as_array().unwrap().len(), 18);
    assert_eq!(v["witness_edge"].as_array().unwrap().len(), 17);
}

#[test]
fn compute_cycle() {
    let f = graph_file("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    let v = json(&run(&["compute", f.path().to_str().unwrap()]));
    assert_eq!(v["family"], "unicyclic");
    assert_eq!((v["D"].as_u64(), v["Dprime"].as_u64()), (Some(3), Some(3)));
    assert!(v.get("in_family_T").is_none());
}

#[test]
fn compute_reads_stdin() {
    let mut child = bin()
        .args(["compute", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"3 2\n0 1\n1 2\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(json(&out)["D"], 2);
}

#[test]
fn exit_codes() {
    let bad = graph_file("3 2\n0 1\n");
    assert_eq!(run(&["compute", bad.path().to_str().unwrap()]).status.code(), Some(2));
    let garbage = graph_file("3 2\n0 x\n1 2\n");
    assert_eq!(run(&["compute", garbage.path().to_str().unwrap()]).status.code(), Some(2));
    let k4 = graph_file("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    assert_eq!(run(&["compute", k4.path().to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(run(&["compute", "/definitely/not/here"]).status.code(), Some(6));
    assert_eq!(run(&["census", "--family", "shrub", "--max-n", "4"]).status.code(), Some(2));
    assert_eq!(run(&["census", "--family", "tree", "--max-n", "17"]).status.code(), Some(5));
}

#[test]
fn verify_sweeps() {
    let out = run(&["verify", "--theorem", "trees", "--max-n", "10", "--oracle-max-n", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("total: 199 instances"), "{err}");
    assert!(err.contains("0 violations"));
    let out = run(&["verify", "--theorem", "2", "--max-n", "8", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["verify", "--theorem", "trees", "--max-n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("order at least 3 required"));
}

#[test]
fn census_files() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("uni.jsonl");
    let out = run(&["census", "--family", "unicyclic", "--max-n", "5", "--out", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&p).unwrap();
    assert_eq!(text.lines().count(), 8);
    for line in text.lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["D"], v["Dprime"]);
    }

    let members = run(&["census", "--family", "tree", "--max-n", "6", "--filter", "in-T"]);
    let lines: Vec<Value> = String::from_utf8_lossy(&members.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert!(lines.iter().any(|v| v["n"] == 6 && v["D"] == 2 && v["Dprime"] == 3));

    let empty = dir.path().join("empty.jsonl");
    let out = run(&["census", "--family", "unicyclic", "--max-n", "6", "--filter", "in-T", "--out", empty.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&empty).unwrap(), "");
}

#[test]
fn census_is_deterministic_across_job_counts() {
    let one = run(&["census", "--family", "tree", "--max-n", "9", "--jobs", "1"]);
    let again = run(&["census", "--family", "tree", "--max-n", "9", "--jobs", "1"]);
    let many = bin()
        .args(["census", "--family", "tree", "--max-n", "9"])
        .env("DISTINGUISH_JOBS", "4")
        .output()
        .unwrap();
    assert_eq!(one.stdout, again.stdout);
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn oracle_subcommands() {
    let c5 = graph_file("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    let p = c5.path().to_str().unwrap();
    assert_eq!(json(&run(&["oracle", "aut", p]))["order"], 10);
    assert_eq!(json(&run(&["oracle", "D", p]))["D"], 3);
    assert_eq!(json(&run(&["oracle", "Dprime", p]))["Dprime"], 3);
    let listed = json(&run(&["oracle", "aut", "--list", p]));
    assert_eq!(listed["automorphisms"].as_array().unwrap().len(), 10);
    let star = graph_file("4 3\n0 1\n0 2\n0 3\n");
    let v = json(&run(&["oracle", "classes", star.path().to_str().unwrap(), "--k", "3"]));
    assert_eq!(v["classes"], 1);
    assert_eq!(run(&["oracle", "classes", c5.path().to_str().unwrap(), "--k", "2"]).status.code(), Some(3));
}
