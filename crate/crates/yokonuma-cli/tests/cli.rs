//! End-to-end tests of the installed binary: flag handling, exit codes,
//! JSON output, and byte-level determinism.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_yhlink"))
        .args(args)
        .output()
        .expect("the binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("stdout is text"),
        String::from_utf8(out.stderr).expect("stderr is text"),
    )
}

/// A temp path unique to this process and label; removed by `Cleanup`.
fn scratch(label: &str) -> (PathBuf, Cleanup) {
    let path = std::env::temp_dir().join(format!("yhlink-{}-{label}", std::process::id()));
    (path.clone(), Cleanup(path))
}

struct Cleanup(PathBuf);

impl Drop for Cleanup {
    fn drop(&mut self) {
        let _ = fs::remove_file(&self.0);
    }
}

#[test]
fn compute_prints_one_frozen_record() {
    let (code, out, err) = run(&[
        "compute", "--d", "1", "--set", "1", "--braid", "B2: s1 s1 s1",
    ]);
    assert_eq!(code, 0, "stderr: {err}");
    assert_eq!(
        out,
        "{\"name\":\"B2: s1 s1 s1\",\"n\":2,\"d\":1,\"set\":[1],\"gamma\":\"symbolic\",\
         \"components\":1,\"polynomial\":\"2*u^2 - u^4 + v^2\"}\n"
    );
}

#[test]
fn malformed_input_exits_two_with_no_output() {
    let (code, out, err) = run(&["compute", "--d", "1", "--set", "1", "--braid", "nonsense"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(!err.is_empty());

    let (code, out, _) = run(&["compute", "--d", "2", "--set", "3", "--braid", "B1:"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());

    let (code, out, _) = run(&["compute", "--d", "1", "--braid", "B1:"]);
    assert_eq!(code, 2, "a color set is required");
    assert!(out.is_empty());

    let (code, _, _) = run(&["verify", "nonsense"]);
    assert_eq!(code, 2);
}

#[test]
fn exhausted_budget_exits_three_with_no_output() {
    let (code, out, err) = run(&[
        "compute", "--d", "1", "--set", "1", "--budget", "2",
        "--braid", "B2: x x x x x s1",
    ]);
    assert_eq!(code, 3, "stderr: {err}");
    assert!(out.is_empty());
    assert!(err.contains("budget"));
}

#[test]
fn tables_are_deterministic_including_thread_count() {
    let (input, _c1) = scratch("det-input.txt");
    fs::write(
        &input,
        "# a small corpus\ntrefoil= B2: s1 s1 s1\n\nB3: s1 s2 x\nunknot= B1:\n",
    )
    .unwrap();
    let input = input.to_str().unwrap();
    let mut outputs = Vec::new();
    for threads in ["1", "4", "1"] {
        let (code, out, err) = run(&[
            "table", "--d", "2", "--dset", "1,2", "--input", input, "--threads", threads,
        ]);
        assert_eq!(code, 0, "stderr: {err}");
        outputs.push(out);
    }
    assert_eq!(outputs[0], outputs[1], "thread count changed the bytes");
    assert_eq!(outputs[0], outputs[2], "a rerun changed the bytes");
    let lines: Vec<&str> = outputs[0].lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].contains("\"name\":\"trefoil\""));
    assert!(lines[1].contains("\"name\":\"B3: s1 s2 x\""));
    assert!(lines[2].contains("\"name\":\"unknot\""));
    assert!(lines[2].contains("\"dset\":[1,2]"));
}

#[test]
fn empty_input_writes_empty_output() {
    let (input, _c1) = scratch("empty-input.txt");
    fs::write(&input, "# only a comment\n\n").unwrap();
    let (code, out, err) = run(&[
        "table", "--d", "1", "--set", "1", "--input", input.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "stderr: {err}");
    assert!(out.is_empty());
}

#[test]
fn malformed_table_line_is_named_and_nothing_is_written() {
    let (input, _c1) = scratch("bad-input.txt");
    let (output, _c2) = scratch("bad-output.jsonl");
    fs::write(&input, "B2: s1 s1\nB2: oops\nB1:\n").unwrap();
    let (code, out, err) = run(&[
        "table", "--d", "1", "--set", "1",
        "--input", input.to_str().unwrap(),
        "--output", output.to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("line 2"), "stderr: {err}");
    assert!(!output.exists(), "no partial output on failure");
}

#[test]
fn params_file_overrides_trace_parameters() {
    let (params, _c1) = scratch("params.txt");
    fs::write(&params, "# send winding one to v\n1 1 v\n").unwrap();
    let (code, out, err) = run(&[
        "compute", "--d", "1", "--set", "1", "--braid", "B3: s1 s2 x",
        "--params", params.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "stderr: {err}");
    assert!(out.contains("\"polynomial\":\"v\""), "got: {out}");

    let (code, out, _) = run(&["compute", "--d", "1", "--set", "1", "--braid", "B3: s1 s2 x"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"polynomial\":\"x[1,1]\""), "got: {out}");
}

#[test]
fn gamma_modes_agree_where_the_weight_cancels() {
    // on one-color words every crossing joins equal colors, so the
    // crossing weight never appears and all modes agree
    let braid = "B3: s1 s2 s2 s1";
    let mut polys = Vec::new();
    for gamma in ["sym", "1", "u^2"] {
        let (code, out, _) = run(&[
            "compute", "--d", "1", "--set", "1", "--braid", braid, "--gamma", gamma,
        ]);
        assert_eq!(code, 0);
        let poly = out.split("\"polynomial\":").nth(1).unwrap().to_string();
        polys.push(poly);
    }
    assert_eq!(polys[0], polys[1]);
    assert_eq!(polys[0], polys[2]);

    let (code, out, _) = run(&[
        "compute", "--d", "2", "--set", "1,2", "--braid", "B2: s1 s1", "--gamma", "bogus(",
    ]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
}

#[test]
fn verify_runs_its_suites() {
    let (code, out, err) = run(&["verify", "iso", "--d", "2", "--n", "2", "--samples", "5"]);
    assert_eq!(code, 0, "stderr: {err}");
    assert!(out.contains("0 failed"), "got: {out}");

    let (code, out, _) = run(&["verify", "skein", "--samples", "5", "--seed", "7"]);
    assert_eq!(code, 0);
    assert!(out.lines().count() >= 2);

    let (code, out, _) = run(&[
        "verify", "props", "--prop", "winding", "--seed", "3",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("0 failed"));
}
