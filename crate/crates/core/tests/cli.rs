mod common;

use std::process::{Command, Output};

fn qloop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qloop")).args(args).output().unwrap()
}

fn tmp(name: &str) -> String {
    let dir = std::env::temp_dir().join(format!("qloop-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn duality_passes_with_exit_zero() {
    let out = qloop(&[
        "verify",
        "duality",
        "--n",
        "2",
        "--max-degree",
        "3",
        "--modes",
        "-2..2",
        "--decomp",
        "zero",
        "--out",
        &tmp("d.json"),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let rep: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(tmp("d.json")).unwrap()).unwrap();
    assert_eq!(rep["summary"]["violations"], 0);
    assert_eq!(rep["config"]["strategy"], "zero");
    assert!(rep["blocks"].as_array().unwrap().len() > 10);
}

#[test]
fn pair_prints_a_value() {
    let out = qloop(&["pair", "--n", "3", "--e", "e[1..2]@0^1", "--f", "f[1..2]@(0,0)"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "-v");
    let out = qloop(&["pair", "--n", "2", "--e", "e[1..1]@1^1", "--f", "f[1..1]@(-1)"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "1");
}

#[test]
fn good_on_fixture_exits_one_with_certificate() {
    let path = common::fixture_path();
    let out = qloop(&["good", "--n", "3", "--element", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let rep: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rep["good"], false);
    assert_eq!(rep["certificate"]["plan"]["1-2"], 1);
    let out = qloop(&["good", "--n", "3", "--element", "e[1..2]@1^2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(qloop(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        qloop(&["verify", "duality", "--n", "3", "--modes", "1..0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qloop(&["verify", "duality", "--n", "3", "--decomp", "diagonal"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qloop(&["pair", "--n", "3", "--e", "e[1..2]@0", "--f", "f[1..2]@(0)"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qloop(&["good", "--n", "3", "--element", "/nonexistent.json"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn reports_are_byte_stable_across_thread_counts() {
    let base = [
        "verify",
        "duality",
        "--n",
        "3",
        "--max-degree",
        "3",
        "--modes",
        "-2..2",
        "--decomp",
        "slope",
    ];
    let a = tmp("t1.json");
    let b = tmp("t3.json");
    for (threads, path) in [("1", &a), ("3", &b)] {
        let mut args = base.to_vec();
        args.extend(["--threads", threads, "--out", path.as_str()]);
        assert_eq!(qloop(&args).status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn csv_format_and_custom_strategy() {
    let table = tmp("decomp.json");
    std::fs::write(
        &table,
        r#"{"decompositions":[{"root":"1-2","r":[1,-1]},{"root":"1-2","r":[-1,0]},{"root":"1-2","r":[0,1]}]}"#,
    )
    .unwrap();
    let decomp = format!("file:{table}");
    let out = qloop(&[
        "gram",
        "--n",
        "3",
        "--max-degree",
        "2",
        "--modes",
        "-1..1",
        "--decomp",
        &decomp,
        "--format",
        "csv",
    ]);
    // [1..2] factors keep modes in [-1, 1], so the three entries suffice
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("row,col,degree,total_mode,entry,laurent\n"));
    assert!(text.contains("f[1..2]@(1,-1)"));
    let out = qloop(&[
        "gram",
        "--n",
        "3",
        "--max-degree",
        "2",
        "--modes",
        "-2..2",
        "--decomp",
        &decomp,
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn remaining_suites() {
    for args in [
        vec!["verify", "relations", "--n", "3"],
        vec!["verify", "key-spec", "--n", "3"],
        vec![
            "verify",
            "oracle",
            "--n",
            "2",
            "--max-degree",
            "2",
            "--out",
            "/dev/null",
        ],
        vec!["verify", "good", "--n", "3", "--max-degree", "2", "--out", "/dev/null"],
        vec![
            "verify",
            "dual-bases",
            "--n",
            "2",
            "--max-degree",
            "2",
            "--decomp",
            "slope",
            "--out",
            "/dev/null",
        ],
    ] {
        let out = qloop(&args);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    let out = qloop(&[
        "verify",
        "dual-bases",
        "--n",
        "2",
        "--max-degree",
        "2",
        "--decomp",
        "slope",
        "--order",
        "e-increasing",
        "--out",
        "/dev/null",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn star_of_generators() {
    let out = qloop(&["star", "--n", "2", "--left", "e[1..1]@0^1", "--right", "e[1..1]@0^1"]);
    assert_eq!(out.status.code(), Some(0));
    let x: qloop::shuffle::ShuffleElement = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(x.degree().0, vec![2]);
}
