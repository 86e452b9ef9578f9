//! End-to-end behavior of the binary: exit codes, deterministic output, and
//! artifact round trips between subcommands.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const EX48: &str = r#"{"kind":"monomial","generators":[{"name":"x","degree":1},{"name":"y","degree":2}],"forbidden":["yx","xxx"]}"#;
const EX42: &str = r#"{"kind":"monomial","generators":[{"name":"x","degree":1},{"name":"y","degree":1},{"name":"z","degree":1}],"forbidden":["xx","yx","zy","xz","zz","yyyy"]}"#;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_pathalg")
}

fn write(dir: &Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn check_classifies_example_files() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "ex48.json", EX48);
    let out = run(&["check", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "class: CMA (also MA)\n");

    let q = write(
        dir.path(),
        "quiver.json",
        r#"{"kind":"quiver","vertices":["u"],"arrows":[{"name":"a","source":"u","target":"u","degree":1}]}"#,
    );
    let out = run(&["check", q.to_str().unwrap()]);
    assert_eq!(stdout(&out), "class: PA1 (also WPA, MA)\n");
}

#[test]
fn malformed_json_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "bad.json", "{not json");
    let out = run(&["check", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_file_exits_2() {
    let out = run(&["check", "/nonexistent/input.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn degree_zero_exits_3_with_message() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        dir.path(),
        "zero.json",
        r#"{"kind":"monomial","generators":[{"name":"x","degree":0}],"forbidden":[]}"#,
    );
    let out = run(&["check", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("degree must be ≥ 1"), "stderr: {err}");
}

#[test]
fn enumeration_budget_exits_4() {
    // Four letters and one long forbidden word: the arrow layer has
    // 4^10 − 1 > 10^6 legal words.
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        dir.path(),
        "big.json",
        r#"{"kind":"monomial","generators":[{"name":"a","degree":1},{"name":"b","degree":1},{"name":"c","degree":1},{"name":"d","degree":1}],"forbidden":["aaaaaaaaaa"]}"#,
    );
    let out = run(&["ufgraph", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "ex48.json", EX48);
    for args in [
        vec!["hilbert", p.to_str().unwrap(), "--max-degree", "6", "--json"],
        vec!["hilbert", p.to_str().unwrap(), "--max-degree", "6"],
        vec![
            "pipeline", p.to_str().unwrap(), "--to", "cma1", "--max-degree", "6",
            "--trials", "10", "--seed", "7", "--json",
        ],
        vec!["verify", p.to_str().unwrap(), "--suite", "ufgraph", "--trials", "10"],
        vec!["ufgraph", p.to_str().unwrap(), "--dot"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.status.code(), Some(0), "args {args:?}");
        assert_eq!(a.stdout, b.stdout, "args {args:?}");
    }
}

#[test]
fn artifacts_chain_between_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "ex48.json", EX48);
    let graph = dir.path().join("graph.json");
    let out = run(&["ufgraph", p.to_str().unwrap(), "--out", graph.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    // The emitted graph classifies as a weighted quiver.
    let out = run(&["check", graph.to_str().unwrap()]);
    assert_eq!(stdout(&out), "class: WPA (also MA)\n");

    // Normalize it, extract the quiver, and connectify.
    let out = run(&["normalize", graph.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["trace"].as_array().unwrap().len(), 1);
    assert_eq!(value["trace"][0]["arrow"], "yyy");
    assert_eq!(value["trace"][0]["new_vertex"], "z1");
    let normalized = dir.path().join("normalized.json");
    std::fs::write(&normalized, serde_json::to_string(&value["quiver"]).unwrap()).unwrap();

    let out = run(&["connectify", normalized.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let pres: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(pres["generators"].as_array().unwrap().len(), 4);
    assert_eq!(pres["forbidden"].as_array().unwrap().len(), 12);

    // The emitted presentation is itself a valid input.
    let connected = dir.path().join("connected.json");
    std::fs::write(&connected, stdout(&out)).unwrap();
    let out = run(&["check", connected.to_str().unwrap()]);
    assert_eq!(stdout(&out), "class: CMA1 (also CMA, MA)\n");
}

#[test]
fn ufgraph_dot_carries_word_letter_degree_labels() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "ex42.json", EX42);
    let out = run(&["ufgraph", p.to_str().unwrap(), "--dot"]);
    let dot = stdout(&out);
    assert!(dot.contains("\"zxyy/z:1\""), "{dot}");
    assert!(dot.contains("digraph"));
}

#[test]
fn normalize_rejects_presentations() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "ex48.json", EX48);
    let out = run(&["normalize", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn connectify_rejects_arrowless_quivers() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        dir.path(),
        "bare.json",
        r#"{"kind":"quiver","vertices":["v"],"arrows":[]}"#,
    );
    let out = run(&["connectify", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_suites_pass_on_the_worked_examples() {
    let dir = tempfile::tempdir().unwrap();
    let ex42 = write(dir.path(), "ex42.json", EX42);
    let ex48 = write(dir.path(), "ex48.json", EX48);
    for file in [&ex42, &ex48] {
        for suite in ["ufgraph", "split", "adjunction", "hilbert"] {
            let out = run(&[
                "verify", file.to_str().unwrap(), "--suite", suite,
                "--max-degree", "6", "--trials", "10",
            ]);
            assert_eq!(out.status.code(), Some(0), "suite {suite}: {}", stdout(&out));
            assert!(stdout(&out).contains("pass"));
        }
    }
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "ex48.json", EX48);
    let out = run(&["verify", p.to_str().unwrap(), "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_json_lists_all_labels() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "ex48.json", EX48);
    let out = run(&["classify", p.to_str().unwrap(), "--json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["most_specific"], "CMA");
    assert_eq!(value["all"], serde_json::json!(["CMA", "MA"]));
}

#[test]
fn pipeline_reports_identity_for_reached_targets() {
    let dir = tempfile::tempdir().unwrap();
    let q = write(
        dir.path(),
        "pa1.json",
        r#"{"kind":"quiver","vertices":["u","v"],"arrows":[{"name":"a","source":"u","target":"v","degree":1}]}"#,
    );
    let out = run(&["pipeline", q.to_str().unwrap(), "--to", "pa1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("zero steps"));
}

#[test]
fn reduce_forbidden_flag_drops_redundant_words() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        dir.path(),
        "redundant.json",
        r#"{"kind":"monomial","generators":[{"name":"x","degree":1},{"name":"y","degree":1}],"forbidden":["yx","yxx"]}"#,
    );
    // Without reduction ℓ = 2; with reduction ℓ = 1, so the graph shrinks.
    let full = run(&["ufgraph", p.to_str().unwrap()]);
    let reduced = run(&["ufgraph", p.to_str().unwrap(), "--reduce-forbidden"]);
    let full: serde_json::Value = serde_json::from_str(&stdout(&full)).unwrap();
    let reduced: serde_json::Value = serde_json::from_str(&stdout(&reduced)).unwrap();
    assert_eq!(full["vertices"].as_array().unwrap().len(), 3); // xx, xy, yy
    assert_eq!(reduced["vertices"].as_array().unwrap().len(), 2); // x, y
}
