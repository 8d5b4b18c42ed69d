use std::io::Write;
use std::process::{Command, Output, Stdio};

fn knotgeo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotgeo")).args(args).output().unwrap()
}

fn knotgeo_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_knotgeo"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn sig_of_the_trefoil() {
    let o = knotgeo(&["--json", "sig", "1 1 1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!((v["sigma"].as_i64(), v["nullity"].as_i64(), v["components"].as_u64()), (Some(-2), Some(0), Some(1)));
}

#[test]
fn verify_main_lists_the_families() {
    let o = knotgeo(&["verify", "main", "--max-crossings", "12", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["claim"], "main");
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    let labels: Vec<&str> = v["findings"].as_array().unwrap().iter().map(|f| f["label"].as_str().unwrap()).collect();
    for label in ["(i) T(3,3)", "(ii) T(3,4)", "(iii) T(3,5)", "(iv) Delta^3", "(v) P(-2,2,08)", "(vi) T(2,06)#T(2,06)"] {
        assert!(labels.contains(&label), "{label}");
    }
}

#[test]
fn sharded_runs_match_the_unsharded_report() {
    for claim in ["main", "t2c", "inequality"] {
        let base = ["verify", claim, "--max-crossings", "7", "--json"];
        let full = knotgeo(&base);
        let sharded = knotgeo(&[&base[..], &["--shards", "3"]].concat());
        assert_eq!(full.stdout, sharded.stdout, "{claim}");
        let part = knotgeo(&[&base[..], &["--shards", "3", "--shard-index", "1"]].concat());
        assert!(json(&part)["checked"].as_u64().unwrap() < json(&full)["checked"].as_u64().unwrap());
    }
}

#[test]
fn sampling_is_reproducible() {
    let args = ["verify", "inequality", "--strands", "4", "--samples", "300", "--max-crossings", "9", "--json"];
    let a = knotgeo(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, knotgeo(&args).stdout);
    let other = knotgeo(&[&args[..], &["--seed", "5"]].concat());
    assert_eq!(json(&other)["parameters"]["seed"], 5);
}

#[test]
fn geography_csv_rows() {
    let o = knotgeo(&["geography", "--max-crossings", "10", "--csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "c,d,realizable,witness");
    assert_eq!(lines.len(), 1 + (1..=10).map(|c| 2 * c - 1).sum::<usize>());
    assert!(lines.contains(&"3,0,false,"));
    assert!(lines.contains(&"5,0,false,"));
    assert!(lines.contains(&"4,-3,true,\"T(2,4)\""));
    assert!(lines.contains(&"9,-7,true,closure of Delta^3"));
}

#[test]
fn exit_codes() {
    assert_eq!(knotgeo(&["nosuch"]).status.code(), Some(2));
    assert_eq!(knotgeo(&["sig", "1 2", "--unknown"]).status.code(), Some(2));
    let o = knotgeo(&["two-bridge", "C(1,0,2)"]);
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("^"), "{err}");
    assert_eq!(knotgeo(&["smooth", "1 1 1", "3"]).status.code(), Some(3));
}

#[test]
fn batch_input_from_stdin() {
    let o = knotgeo_stdin(&["--json", "invariants", "-"], "1 2 1 1 2 1\nC(2,1,1,1,2)@5p\n-1 -1 -1\n");
    assert_eq!(o.status.code(), Some(0));
    let labels: Vec<String> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["label"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(labels, ["T(3,3)", "2-bridge 21/8", "mirror of T(2,3)"]);
}

#[test]
fn smoothing_changes_sigma_by_one() {
    let v = json(&knotgeo(&["--json", "smooth", "1 1 1", "0"]));
    assert_eq!(v["smoothed"]["letters"], serde_json::json!([1, 1]));
    assert_eq!(v["delta_sigma"], 1);
}
