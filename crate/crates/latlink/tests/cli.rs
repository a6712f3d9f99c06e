//! End-to-end tests of the `latlink` binary: file formats, exit codes,
//! canonical output and the verification certificates.

mod common;

use common::*;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_latlink"))
}

fn run(args: &[&str], dir: &Path) -> Output {
    bin()
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).to_string()
}

fn write(dir: &Path, name: &str, text: &str) {
    std::fs::write(dir.join(name), text).unwrap();
}

const K_SKEW: &str = r#"{"ground": ["x", "y"], "lattice_basis": [["1", "1"], ["0", "3"]], "space_basis": []}"#;

#[test]
fn dual_twice_returns_canonical_form() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "k.json", K_SKEW);
    let d1 = run(&["dual", "k.json"], dir.path());
    assert!(d1.status.success());
    write(dir.path(), "d.json", &stdout(&d1));
    let d2 = run(&["dual", "d.json"], dir.path());
    assert!(d2.status.success());
    let canonical = run(&["basis", "k.json"], dir.path());
    assert_eq!(stdout(&d2), stdout(&canonical));
}

#[test]
fn output_is_deterministic_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "k.json", K_SKEW);
    let a = run(&["lll", "k.json", "--delta", "3/4"], dir.path());
    let b = run(&["lll", "k.json", "--delta", "3/4"], dir.path());
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).ends_with('\n'));
}

#[test]
fn verify_prints_certificates_without_changing_output() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "k.json", K_SKEW);
    let plain = run(&["lll", "k.json"], dir.path());
    let verified = run(&["lll", "k.json", "--verify"], dir.path());
    assert!(verified.status.success());
    assert_eq!(stdout(&plain), stdout(&verified));
    let cert = stderr(&verified);
    assert!(cert.contains("verify size reduction and Lovász hold: ok"));
    assert!(cert.contains("verify output generates the same lattice: ok"));
}

#[test]
fn separators_recover_planted_partition() {
    let mut rng = rng(42);
    let dir = tempfile::tempdir().unwrap();
    // planted blocks {e0,e1} and {e2}, scrambled by a unimodular matrix
    let ground = rand_ground("e", 3);
    let planted = latlink::ground::LabeledMatrix::from_i64(
        ground,
        &[&[2, 1, 0], &[0, 3, 0], &[0, 0, 5]],
    )
    .unwrap();
    let scrambled = scramble(&mut rng, &planted);
    let file = latlink::files::LatticeFile::from_matrix(&scrambled);
    write(
        dir.path(),
        "scrambled.json",
        &latlink::files::write_canonical_json(&file),
    );
    let out = run(&["separators", "scrambled.json", "--verify"], dir.path());
    assert!(out.status.success(), "{}", stderr(&out));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        parsed["blocks"],
        serde_json::json!([["e0", "e1"], ["e2"]])
    );
    assert!(stderr(&out).contains("verify direct-sum identity over the blocks: ok"));
}

#[test]
fn exit_codes_follow_the_contract() {
    let dir = tempfile::tempdir().unwrap();
    // 1: missing file
    let out = run(&["dual", "missing.json"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    // 1: malformed JSON
    write(dir.path(), "bad.json", "{not json");
    let out = run(&["dual", "bad.json"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    // 1: malformed rational
    write(
        dir.path(),
        "badrat.json",
        r#"{"ground": ["x"], "lattice_basis": [["1/0"]], "space_basis": []}"#,
    );
    let out = run(&["dual", "badrat.json"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    // 2: precondition failure, named
    write(dir.path(), "k.json", K_SKEW);
    let out = run(&["dual-lll", "k.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not LLL-reduced"));
    // 2: bad delta
    let out = run(&["lll", "k.json", "--delta", "2"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    // 0: fine
    let out = run(&["basis", "k.json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn compose_and_iit_solve_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "v.json",
        r#"{"ground": ["s", "p"], "lattice_basis": [], "space_basis": [["1", "2"]]}"#,
    );
    write(
        dir.path(),
        "lp.json",
        r#"{"ground": ["p"], "lattice_basis": [["1"]], "space_basis": []}"#,
    );
    let out = run(
        &["compose", "v.json", "lp.json", "--kind", "matched", "--verify"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["lattice_basis"], serde_json::json!([["1/2"]]));
    write(dir.path(), "ks.json", &stdout(&out));
    // iit-solve recovers a middle operand and certifies the compose-back
    let out = run(&["iit-solve", "v.json", "ks.json", "--verify"], dir.path());
    assert!(out.status.success(), "{}", stderr(&out));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["feasible"], serde_json::json!(true));
    assert!(stderr(&out).contains("verify compose-back gives K_SQ: ok"));
}

#[test]
fn minor_and_sum_and_intersect() {
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "l.json",
        r#"{"ground": ["s", "p"], "lattice_basis": [["1", "2"]], "space_basis": []}"#,
    );
    let out = run(
        &["minor", "l.json", "--keep", "s", "--mode", "restrict", "--verify"],
        dir.path(),
    );
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["lattice_basis"], serde_json::json!([["1"]]));

    write(
        dir.path(),
        "two.json",
        r#"{"ground": ["e"], "lattice_basis": [["2"]], "space_basis": []}"#,
    );
    write(
        dir.path(),
        "three.json",
        r#"{"ground": ["e"], "lattice_basis": [["3"]], "space_basis": []}"#,
    );
    let out = run(&["sum", "two.json", "three.json", "--verify"], dir.path());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["lattice_basis"], serde_json::json!([["1"]]));
    let out = run(&["intersect", "two.json", "three.json"], dir.path());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["lattice_basis"], serde_json::json!([["6"]]));
}

#[test]
fn cvp_family_commands() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "k.json", K_SKEW);
    let reduced = run(&["lll", "k.json"], dir.path());
    write(dir.path(), "red.json", &stdout(&reduced));
    let out = run(
        &["babai", "red.json", "--target", "2/5,13/5", "--verify"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["mode"], serde_json::json!("nearest-plane"));
    let out = run(
        &["cvp", "red.json", "--target", "2/5,13/5", "--exact"],
        dir.path(),
    );
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["mode"], serde_json::json!("exact"));

    write(
        dir.path(),
        "lpq.json",
        r#"{"ground": ["p", "q"], "lattice_basis": [["1", "3"], ["0", "5"]], "space_basis": []}"#,
    );
    let out = run(
        &["q1", "lpq.json", "--target", "1", "--on", "p", "--exact", "--verify"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["entries"], serde_json::json!(["1", "-2"]));

    write(
        dir.path(),
        "z2.json",
        r#"{"ground": ["x", "y"], "lattice_basis": [["1", "0"], ["0", "1"]], "space_basis": []}"#,
    );
    write(
        dir.path(),
        "axis.json",
        r#"{"ground": ["x", "y"], "lattice_basis": [], "space_basis": [["1", "0"]]}"#,
    );
    let out = run(
        &["q2", "z2.json", "axis.json", "--target", "1,0", "--exact", "--verify"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["entries"], serde_json::json!(["1", "0"]));

    write(
        dir.path(),
        "vsp.json",
        r#"{"ground": ["s1", "s2", "p1", "p2"], "lattice_basis": [],
            "space_basis": [["1", "0", "1", "0"], ["0", "1", "0", "1"]]}"#,
    );
    write(
        dir.path(),
        "lp2.json",
        r#"{"ground": ["p1", "p2"], "lattice_basis": [["2", "1"], ["0", "3"]], "space_basis": []}"#,
    );
    let out = run(
        &["q3", "vsp.json", "lp2.json", "--target", "2,4", "--exact", "--verify"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["entries"], serde_json::json!(["2", "4"]));
}

#[test]
fn selfdual_and_port_space_commands() {
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "k.json",
        r#"{"ground": ["e1", "e2"], "lattice_basis": [["2", "0"], ["0", "1/2"]], "space_basis": []}"#,
    );
    write(dir.path(), "swap.json", r#"{"pairs": [["e1", "e2"]]}"#);
    let out = run(
        &["selfdual-check", "k.json", "--perm", "swap.json"],
        dir.path(),
    );
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["self_dual"], serde_json::json!(true));
    let out = run(&["selfdual-check", "k.json"], dir.path());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["self_dual"], serde_json::json!(false));

    write(
        dir.path(),
        "zsp.json",
        r#"{"ground": ["s", "p"], "lattice_basis": [["1", "0"], ["0", "1"]], "space_basis": []}"#,
    );
    write(
        dir.path(),
        "zp.json",
        r#"{"ground": ["p"], "lattice_basis": [["1"]], "space_basis": []}"#,
    );
    let out = run(
        &["selfdual-compose", "zsp.json", "zp.json", "--verify"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["certified_self_dual"], serde_json::json!(true));

    write(
        dir.path(),
        "g.json",
        r#"{"edges": [{"id": "e1", "tail": "a", "head": "b"},
                      {"id": "e2", "tail": "b", "head": "c"},
                      {"id": "e3", "tail": "c", "head": "a"}]}"#,
    );
    let out = run(
        &["port-space", "g.json", "--ports", "e2", "--verify"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stderr(&out).contains("verify space self dual relative to the copy swap: ok"));
    // a bridge is a cutset: rejected with exit 2
    write(
        dir.path(),
        "path.json",
        r#"{"edges": [{"id": "e1", "tail": "a", "head": "b"},
                      {"id": "e2", "tail": "b", "head": "c"}]}"#,
    );
    let out = run(&["port-space", "path.json", "--ports", "e1"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cutset"));
}

#[test]
fn expr_commands() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "e.txt", "K1[S,P] <-> K2[P]\n");
    write(
        dir.path(),
        "b.json",
        r#"{"index_sets": {"S": ["s1", "s2"], "P": ["p1", "p2"]},
            "bindings": {
              "K1": {"ground": ["s1", "s2", "p1", "p2"], "lattice_basis": [],
                     "space_basis": [["1", "0", "1", "0"], ["0", "1", "0", "1"]]},
              "K2": {"ground": ["p1", "p2"], "lattice_basis": [["2", "1"], ["0", "3"]],
                     "space_basis": []}}}"#,
    );
    let out = run(&["expr", "dual", "e.txt"], dir.path());
    assert_eq!(stdout(&out), "K1^d[S,P] >-< K2^d[P]\n");
    let out = run(
        &["expr", "eval", "e.txt", "--bindings", "b.json", "--verify"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stderr(&out).contains("verify implicit duality commuting square: ok"));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["ground"], serde_json::json!(["s1", "s2"]));
    let out = run(&["expr", "dot", "e.txt"], dir.path());
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph linkage {"));
    assert!(dot.contains("label=\"P\", style=solid"));
    // irregular expressions are rejected with a diagnostic and exit 2
    write(dir.path(), "bad.txt", "(KAB[A,B] <-> KBC[B,C]) <-> KCA[C,A]\n");
    let out = run(&["expr", "dot", "bad.txt"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("null subexpression"));
}

#[test]
fn batch_mode_processes_files_concurrently() {
    let dir = tempfile::tempdir().unwrap();
    for i in 0..4 {
        write(
            dir.path(),
            &format!("k{i}.json"),
            &format!(
                r#"{{"ground": ["x", "y"], "lattice_basis": [["1", "{i}"], ["0", "3"]], "space_basis": []}}"#
            ),
        );
    }
    let out = run(
        &[
            "hnf", "k0.json", "k1.json", "k2.json", "k3.json", "--jobs", "2",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    for i in 0..4 {
        let path = dir.path().join(format!("k{i}.out.json"));
        assert!(path.exists(), "missing batch output {i}");
        let parsed: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
        assert!(parsed["h"].is_array());
        assert!(parsed["pivot_columns"].is_array());
    }
}

#[test]
fn hnf_and_minima_output_shape() {
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "a.json",
        r#"{"ground": ["x", "y"], "lattice_basis": [["2", "3"], ["4", "5"]], "space_basis": []}"#,
    );
    let out = run(&["hnf", "a.json", "--verify"], dir.path());
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["h"], serde_json::json!([["2", "0"], ["0", "1"]]));
    assert!(stderr(&out).contains("verify unimodular witness |det U| = 1: ok"));
    assert!(stderr(&out).contains("verify H = U·A: ok"));

    write(dir.path(), "k.json", K_SKEW);
    let out = run(&["minima", "k.json", "--verify"], dir.path());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["lambdas_sq"], serde_json::json!(["2", "5"]));
    assert_eq!(
        parsed["witnesses"],
        serde_json::json!([["1", "1"], ["1", "-2"]])
    );

    let out = run(&["linked-basis", "--help"], dir.path());
    assert!(out.status.success());
}

#[test]
fn linked_basis_command() {
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "vsp.json",
        r#"{"ground": ["s1", "s2", "p1", "p2"], "lattice_basis": [],
            "space_basis": [["1", "0", "1", "0"], ["0", "1", "0", "1"]]}"#,
    );
    write(
        dir.path(),
        "kp.json",
        r#"{"ground": ["p1", "p2"], "lattice_basis": [["1", "0"], ["0", "1"]], "space_basis": []}"#,
    );
    let out = run(
        &["linked-basis", "vsp.json", "kp.json", "--verify"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        parsed["lattice_basis"],
        serde_json::json!([["1", "0"], ["0", "1"]])
    );
    let out = run(
        &["linked-basis", "vsp.json", "kp.json", "--dual"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
}
