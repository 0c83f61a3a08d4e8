use std::io::Write;
use std::process::{Command, Output, Stdio};

fn leafdiam(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_leafdiam"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: &str) -> String {
    let out = leafdiam(args, stdin);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn formula_subcommands() {
    assert_eq!(ok(&["min-leaves", "21", "3"], ""), "19\n");
    assert_eq!(ok(&["lesniak-bound", "21", "3"], ""), "14\n");
    assert_eq!(ok(&["max-leaves", "21", "3"], ""), "19\n");
    assert_eq!(ok(&["min-diameter", "6", "3"], ""), "4\n");
    assert_eq!(ok(&["max-diameter", "6", "3"], ""), "4\n");
    assert_eq!(ok(&["min-leaves", "2", "1"], ""), "2\n");
}

#[test]
fn infeasible_exits_two() {
    let out = leafdiam(&["min-leaves", "3", "1"], "");
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert_eq!(
        String::from_utf8_lossy(&out.stderr),
        "infeasible: d=1 requires n=2\n"
    );
    for args in [
        &["min-diameter", "3", "3"][..],
        &["max-leaves", "4", "9"],
        &["witness", "--min-diameter", "4", "1"],
        &["min-leaves", "x", "3"],
        &["table", "--n", "10"],
        &["verify", "--max-n", "5", "--cap", "12"],
        &["verify", "--max-n", "5", "--jobs", "0"],
    ] {
        assert_eq!(leafdiam(args, "").status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn witness_output() {
    assert_eq!(
        ok(&["witness", "--min-leaves", "7", "4"], ""),
        "7\n0 1\n0 3\n0 5\n1 2\n3 4\n5 6\n"
    );
    assert_eq!(ok(&["witness", "--min-leaves", "2", "1"], ""), "2\n0 1\n");
    assert_eq!(
        ok(&["witness", "--min-diameter", "5", "4"], ""),
        "5\n0 1\n0 2\n0 3\n0 4\n"
    );
    assert_eq!(
        ok(&["witness", "--max-leaves", "6", "4", "--dot"], ""),
        "graph T { 0 -- 1; 1 -- 2; 2 -- 3; 2 -- 5; 3 -- 4; }\n"
    );
    assert_eq!(
        ok(&["witness", "--max-diameter", "4", "2"], ""),
        "4\n0 1\n1 2\n2 3\n"
    );
    let two_kinds = leafdiam(
        &[
            "witness",
            "--min-leaves",
            "7",
            "4",
            "--max-leaves",
            "7",
            "4",
        ],
        "",
    );
    assert_eq!(two_kinds.status.code(), Some(2));
}

// Stem 0..6 with a branch 2 - 7 - {8, 9}.
const BRANCHY: &str = "10\n0 1\n1 2\n2 3\n2 7\n3 4\n4 5\n5 6\n7 8\n7 9\n";

#[test]
fn spiderize_trace_and_pipe() {
    let once = ok(&["spiderize"], BRANCHY);
    assert_eq!(once, "10\n0 1\n1 2\n2 3\n3 4\n3 7\n3 8\n4 5\n5 6\n7 9\n");
    assert_eq!(ok(&["spiderize"], &once), once);

    let traced = ok(&["spiderize", "--trace"], BRANCHY);
    let steps: Vec<_> = traced.lines().filter(|l| l.starts_with('#')).collect();
    assert_eq!(
        steps,
        vec![
            "# step u=8 b=7 w=8 z=3 phi=20->18",
            "# step u=9 b=2 w=7 z=3 phi=18->16"
        ]
    );
    assert!(traced.starts_with(&once));
    // Trace comments are skipped when piped back in.
    assert_eq!(ok(&["spiderize"], &traced), once);
}

#[test]
fn spiderize_reads_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(BRANCHY.as_bytes()).unwrap();
    let path = file.path().to_str().unwrap();
    assert_eq!(ok(&["spiderize", path], ""), ok(&["spiderize"], BRANCHY));
    assert_eq!(
        leafdiam(&["spiderize", "/nonexistent/tree.txt"], "")
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn malformed_tree_input() {
    let out = leafdiam(&["spiderize"], "2\n0 x\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let out = leafdiam(&["spiderize"], "4\n0 1\n1 2\n2 3\n3 0\n");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_diametral() {
    let path5 = "5\n0 1\n1 2\n2 3\n3 4\n";
    assert_eq!(
        ok(&["check-diametral", "--path", "0,1,2,3,4"], path5),
        "true\n"
    );
    assert_eq!(
        ok(&["check-diametral", "--path", "1,2,3"], path5),
        "false\n"
    );
    assert_eq!(
        leafdiam(&["check-diametral", "--path", "0,2"], path5)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        leafdiam(&["check-diametral", "--path", "0,a"], path5)
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_and_table() {
    let report = ok(&["verify", "--max-n", "7", "--jobs", "2"], "");
    assert!(report.ends_with("all formulas match\n"), "{report}");
    assert_eq!(
        ok(&["table", "--n", "4", "--csv"], ""),
        "n,d,min_leaves,max_leaves\n4,2,3,3\n4,3,2,2\nn,f,min_diam,max_diam\n4,2,3,3\n4,3,2,2\n"
    );
    assert!(ok(&["table", "--n", "4"], "").starts_with("order 4: 16 labeled trees\n"));
    let out = leafdiam(&["table", "--n", "3", "--cap", "10"], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("warning:"));
}
