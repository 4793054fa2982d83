use std::process::{Command, Output};

use serde_json::Value;

fn qsegre(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsegre"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn wq_prints_ascending_coefficients() {
    let out = qsegre(&["wq", "--n", "3"]);
    assert!(out.status.success());
    assert_eq!(
        stdout_json(&out),
        serde_json::json!(["0", "0", "2", "6", "6", "4", "1"])
    );
    assert_eq!(stdout_json(&qsegre(&["wq", "--n", "0"])), serde_json::json!(["1"]));
    assert_eq!(stdout_json(&qsegre(&["wq", "--n", "4", "--at", "1"])), "211");
}

#[test]
fn wq_beyond_bound_is_labeled() {
    let out = qsegre(&["wq", "--n", "3", "--at", "1", "--enum-bound", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out), "19");
    assert!(String::from_utf8_lossy(&out.stderr).contains("recurrence"));
    let j = stdout_json(&qsegre(&["--json", "wq", "--n", "3", "--enum-bound", "2"]));
    assert_eq!(j["source"], "recurrence");
}

#[test]
fn json_output_is_deterministic() {
    let a = qsegre(&["--json", "verify", "el", "--n", "2", "--q", "3"]);
    let b = qsegre(&["--json", "verify", "el", "--n", "2", "--q", "3"]);
    assert_eq!(a.stdout, b.stdout);
    let a = qsegre(&["frobenius", "--n", "3"]);
    let b = qsegre(&["frobenius", "--n", "3", "--threads", "1"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn frobenius_small() {
    let j = stdout_json(&qsegre(&["frobenius", "--n", "2"]));
    assert_eq!(j["character"]["1,1|1,1"], 3);
    assert_eq!(j["character"]["2|2"], -1);
    assert_eq!(j["ch"]["1,1|1,1"], "3/4");
}

#[test]
fn lattice_chain_report() {
    let j = stdout_json(&qsegre(&["lattice", "--n", "2", "--q", "2", "--chains"]));
    assert_eq!(j["chains"], serde_json::json!({"12": 1, "21": 2}));
    let j = stdout_json(&qsegre(&[
        "lattice", "--n", "2", "--q", "2", "--segre", "--chains", "--check-el",
    ]));
    assert_eq!(j["descending_count"], 8);
    assert_eq!(j["el"]["status"], "PASS");
}

#[test]
fn lattice_poset_round_trips() {
    let j = stdout_json(&qsegre(&["lattice", "--n", "2", "--q", "3"]));
    let p: qsegre::poset::PosetJson<usize> = serde_json::from_value(j["poset"].clone()).unwrap();
    let (poset, labels) = p.into_poset().unwrap();
    assert_eq!(poset.rank_sizes(), vec![1, 4, 1]);
    assert_eq!(labels.len(), 8);
}

#[test]
fn verify_exit_codes() {
    let out = qsegre(&["--json", "verify", "mobius", "--n", "2", "--q", "2"]);
    assert!(out.status.success());
    let j = stdout_json(&out);
    assert_eq!(j["status"], "PASS");
    assert_eq!(j["checks"][0]["data"]["mobius"], 8);

    let out = qsegre(&["verify", "prop26", "--sizes", "2,1,1,2"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("PASS"));

    // a bound that is too small turns the check into a FAIL, not a crash
    let out = qsegre(&["verify", "csv", "--n", "4", "--enum-bound", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("FAIL"));
}

#[test]
fn invalid_input_is_rejected() {
    assert_eq!(qsegre(&["mobius", "--n", "2", "--q", "6"]).status.code(), Some(2));
    assert_eq!(qsegre(&["verify", "all", "--n", "2"]).status.code(), Some(2));
    assert_eq!(qsegre(&["verify", "prop26", "--sizes", "1,2"]).status.code(), Some(2));
    assert_eq!(qsegre(&["qbinom", "--n", "2", "--k", "3"]).status.code(), Some(2));
    assert!(!qsegre(&["wq"]).status.success());
}

#[test]
fn verify_all_passes() {
    let out = qsegre(&["--json", "verify", "all", "--max-n", "3"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let j = stdout_json(&out);
    assert!(j["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["status"] == "PASS"));
}
