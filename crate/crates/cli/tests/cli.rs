use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twomega")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(stdout(&out).trim()).unwrap()
}

fn gen(args: &[&str]) -> String {
    let mut all = vec!["gen"];
    all.extend_from_slice(args);
    stdout(&run(&all)).trim().to_string()
}

#[test]
fn treewidth_of_k4() {
    let k4 = gen(&["complete", "4"]);
    let v = json(&["invariant", "treewidth", "--graph", &k4]);
    assert_eq!(v["value"], 3);
}

#[test]
fn graph_from_stdin_as_edge_list() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_twomega"))
        .args(["invariant", "clique"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    let out = child.wait_with_output().unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["value"], 2);
}

#[test]
fn classify_k23_induced_minor() {
    let k23 = gen(&["complete-bipartite", "2", "3"]);
    let v = json(&["classify", "--relation", "induced_minor", "--pattern", &k23]);
    assert_eq!(v["bounded"], true);
    assert_eq!(v["binding"]["kind"], "skodinis_ramsey");
}

#[test]
fn contains_returns_a_witness() {
    let c4 = gen(&["cycle", "4"]);
    let c7 = gen(&["cycle", "7"]);
    let v = json(&["contains", "--relation", "induced-minor", "--pattern", &c4, "--host", &c7]);
    assert_eq!(v["contained"], true);
    assert_eq!(v["witness"]["bags"].as_array().unwrap().len(), 4);
    let k4 = gen(&["complete", "4"]);
    let v = json(&["contains", "--relation", "minor", "--pattern", &k4, "--host", &c7]);
    assert_eq!(v["contained"], false);
}

#[test]
fn recognizers() {
    let claw = gen(&["claw"]);
    let v = json(&["recognize", "k1q-free", "--graph", &claw, "--q", "3"]);
    assert_eq!(v["member"], false);
    let c5 = gen(&["cycle", "5"]);
    let v = json(&["recognize", "chordal", "--graph", &c5]);
    assert_eq!(v["witness"]["kind"], "hole");
}

#[test]
fn solvers() {
    let p4 = gen(&["path", "4"]);
    let v = json(&["solve", "mwis-k1q", "--graph", &p4, "--weights", "1,2.5,3/2,1"]);
    assert_eq!((v["weight"].as_u64(), v["scale"].as_u64()), (Some(7), Some(2)));
    let k4 = gen(&["complete", "4"]);
    let v = json(&["solve", "list-color", "--k", "3", "--graph", &k4]);
    assert_eq!(v["outcome"], "not_colorable");
    let c5 = gen(&["cycle", "5"]);
    let v = json(&["solve", "list-color", "--k", "3", "--graph", &c5, "--lists", "[[1],[2],[1,3],[2],[3]]"]);
    assert_eq!(v["outcome"], "colored");
    let v = json(&["solve", "approx-clique", "--graph", &k4]);
    assert_eq!(v["omega"], 4);
}

#[test]
fn random_generation_is_seeded() {
    let a = gen(&["random", "12", "0.4", "--seed", "9"]);
    let b = gen(&["random", "12", "0.4", "--seed", "9"]);
    assert_eq!(a, b);
}

#[test]
fn verify_exit_codes() {
    let out = run(&["verify", "--suite", "table1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 126);
    let out = run(&["verify", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["gen", "wall"]);
    assert_eq!(out.status.code(), Some(2));

    // a false binding fails with exit 1 and replayable witnesses
    let dir = std::env::temp_dir().join(format!("twomega-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let spec = dir.join("spec.json");
    std::fs::write(
        &spec,
        r#"{"name":"false","class":{"type":"all"},
            "generators":[{"family":"exhaustive","n_max":3,"connected":true}],
            "checks":["binding"],"binding":{"kind":"constant","value":0}}"#,
    )
    .unwrap();
    let out = run(&["verify", "--spec", spec.to_str().unwrap(), "--jobs", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let rows: Vec<Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().filter(|r| r["tw"] != 0).all(|r| r["checks"][0]["outcome"] == "violation"));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn refusals_need_the_flag() {
    let k6 = gen(&["complete", "6"]);
    let v = json(&["--budget", "1", "contains", "--relation", "minor", "--pattern", &k6, "--host", &k6]);
    assert!(v.get("refused").is_some());
    let out = run(&["verify", "--suite", "table1", "--budget", "1", "--csv"]);
    let refusals: u64 = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().parse::<u64>().unwrap())
        .sum();
    assert!(refusals > 0);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["verify", "--suite", "table1", "--budget", "1", "--allow-refusals"]);
    assert!(out.status.success());
}
