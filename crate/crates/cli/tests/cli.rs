//! Black-box tests of the `quasipos` binary: exit codes, report shape,
//! determinism, and the documented pipelines.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quasipos"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

#[test]
fn equal_on_the_shipped_disk_pair() {
    let out = run(&[
        "equal",
        data("beta.braid").to_str().unwrap(),
        data("beta-prime.braid").to_str().unwrap(),
        "--strands",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["verdict"], "equal");
    assert_eq!(report["exit_code"], 0);
    assert_eq!(report["inputs"].as_array().unwrap().len(), 2);
    assert_eq!(report["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn equal_against_the_identity_word_fails_with_exit_1() {
    let mut tmp = tempfile::NamedTempFile::new().unwrap();
    writeln!(tmp, "# identity word").unwrap();
    let out = run(&[
        "equal",
        data("beta.braid").to_str().unwrap(),
        tmp.path().to_str().unwrap(),
        "--strands",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["verdict"], "not-equal");
}

#[test]
fn malformed_input_exits_2_with_an_error_report() {
    let mut tmp = tempfile::NamedTempFile::new().unwrap();
    writeln!(tmp, "1 0 2").unwrap();
    let out = run(&[
        "equal",
        data("beta.braid").to_str().unwrap(),
        tmp.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let report = stdout_json(&out);
    assert_eq!(report["verdict"], "error");
    assert_eq!(report["exit_code"], 2);
}

#[test]
fn missing_file_exits_2() {
    let out = run(&["qp-surface", "no-such-file.qp"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let beta = data("beta.braid");
    let beta_prime = data("beta-prime.braid");
    let args = [
        "equal",
        beta.to_str().unwrap(),
        beta_prime.to_str().unwrap(),
        "--strands",
        "5",
        "--json",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
    assert!(first.stderr.is_empty(), "--json silences the summary");
}

#[test]
fn qp_surface_of_a_trivial_factorization() {
    let mut tmp = tempfile::NamedTempFile::new().unwrap();
    write!(tmp, r#"{{"strands": 3, "bands": []}}"#).unwrap();
    let out = run(&["qp-surface", tmp.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let details = &stdout_json(&out)["details"];
    assert_eq!(details["chi"], 3);
    assert_eq!(details["boundary"], 3);
    assert_eq!(details["genus"], 0);
}

#[test]
fn qp_sum_output_feeds_back_into_qp_surface() {
    let out = run(&[
        "qp-sum",
        data("a.qp").to_str().unwrap(),
        data("a0.qp").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let mut tmp = tempfile::NamedTempFile::new().unwrap();
    tmp.write_all(&out.stdout).unwrap();
    let surface = run(&["qp-surface", tmp.path().to_str().unwrap()]);
    let details = &stdout_json(&surface)["details"];
    assert_eq!(details["chi"], -1);
    assert_eq!(details["boundary"], 3);
    assert_eq!(details["genus"], 0);
}

#[test]
fn stein_check_output_feeds_lattice_sphere_check() {
    let out = run(&["stein-check", data("sigma-t.stein").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let lattice = stdout_json(&out);
    assert_eq!(lattice["matrix"][0][0], -2);
    assert_eq!(lattice["c1"][0], -2);
    let mut tmp = tempfile::NamedTempFile::new().unwrap();
    tmp.write_all(&out.stdout).unwrap();
    let check = run(&[
        "lattice-sphere-check",
        tmp.path().to_str().unwrap(),
        "--square",
        "-2",
    ]);
    assert_eq!(check.status.code(), Some(0));
    assert_eq!(stdout_json(&check)["verdict"], "no_sphere_in_class_list");
}

#[test]
fn stein_check_rejects_framing_violations_with_exit_1() {
    let mut tmp = tempfile::NamedTempFile::new().unwrap();
    write!(
        tmp,
        r#"{{"components": [{{"writhe": 0, "right_cusps": 1, "left_cusps_down": 0,
             "right_cusps_up": 0, "framing": -1}}], "linking": [[-1]]}}"#
    )
    .unwrap();
    let out = run(&["stein-check", tmp.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["verdict"], "violations");
}

#[test]
fn stein_check_rejects_parity_corruption_with_exit_2() {
    // tb = −1 with rotation −1 breaks rotation ≡ tb + 1 (mod 2).
    let mut tmp = tempfile::NamedTempFile::new().unwrap();
    write!(
        tmp,
        r#"{{"components": [{{"writhe": 0, "right_cusps": 1, "left_cusps_down": 0,
             "right_cusps_up": 1, "framing": -2}}], "linking": [[-2]]}}"#
    )
    .unwrap();
    let out = run(&["stein-check", tmp.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn normalize_emits_a_word_equal_to_the_input() {
    let out = run(&["normalize", data("beta.braid").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    let word = report["details"]["word"].as_str().unwrap();
    let mut tmp = tempfile::NamedTempFile::new().unwrap();
    writeln!(tmp, "{word}").unwrap();
    let eq = run(&[
        "equal",
        data("beta.braid").to_str().unwrap(),
        tmp.path().to_str().unwrap(),
        "--strands",
        "5",
    ]);
    assert_eq!(eq.status.code(), Some(0));
}

#[test]
fn subword_check_requires_one_relator_shape() {
    let mut tmp = tempfile::NamedTempFile::new().unwrap();
    write!(tmp, r#"{{"generators": 2, "relators": [[1], [2]]}}"#).unwrap();
    let out = run(&[
        "subword-check",
        tmp.path().to_str().unwrap(),
        "--candidate",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lattice_classes_rejects_indefinite_forms() {
    let mut tmp = tempfile::NamedTempFile::new().unwrap();
    write!(tmp, r#"{{"matrix": [[2]], "c1": [0]}}"#).unwrap();
    let out = run(&[
        "lattice-classes",
        tmp.path().to_str().unwrap(),
        "--square",
        "-2",
    ]);
    assert_eq!(out.status.code(), Some(2));
}
