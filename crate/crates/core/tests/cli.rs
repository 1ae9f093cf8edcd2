use std::io::Write;
use std::process::{Command, Output, Stdio};

use serre_depth::io::{read_complex, read_graph, read_ideal};
use serre_depth::{families, io};

fn serre(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_serre"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    // the process may exit before reading its input
    let _ = child.stdin.take().unwrap().write_all(stdin.as_bytes());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone())
        .unwrap()
        .trim_end()
        .to_string()
}

fn complex_json(cx: &serre_depth::SimplicialComplex) -> String {
    serde_json::to_string(&io::complex_to_json(cx)).unwrap()
}

const C4: &str = r#"{"n": 4, "facets": [[1,2],[2,3],[3,4],[1,4]]}"#;

#[test]
fn depth_of_the_four_cycle() {
    let o = serre(&["complex", "depth"], C4);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "2");
}

#[test]
fn reads_from_a_file() {
    let dir = std::env::temp_dir().join(format!("serre-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c4.json");
    std::fs::write(&path, C4).unwrap();
    let o = serre(
        &[
            "complex",
            "serre-depth",
            "--r",
            "2",
            "--in",
            path.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(stdout(&o), "2");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn betti_table_grid() {
    let o = serre(&["complex", "betti"], C4);
    assert_eq!(
        stdout(&o),
        "       0 1 2\ntotal: 1 2 1\n    0: 1 . .\n    1: . 2 .\n    2: . . 1"
    );
}

#[test]
fn ce2_sequence_output() {
    let o = serre(
        &["symbolic", "sequence", "--max", "8"],
        &complex_json(&families::ce2()),
    );
    assert!(o.status.success());
    let values: Vec<usize> = stdout(&o).split(' ').map(|s| s.parse().unwrap()).collect();
    assert_eq!(values.len(), 8);
    let json = serre(
        &["--json", "symbolic", "sequence", "--max", "8"],
        &complex_json(&families::ce2()),
    );
    let parsed: Vec<usize> = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(parsed, values);
}

#[test]
fn field_flag_changes_homology() {
    let rp2 = complex_json(&families::rp2());
    let q: serde_json::Value =
        serde_json::from_str(&stdout(&serre(&["--json", "complex", "homology"], &rp2))).unwrap();
    let f2: serde_json::Value = serde_json::from_str(&stdout(&serre(
        &["--json", "--field", "fp:2", "complex", "homology"],
        &rp2,
    )))
    .unwrap();
    assert_eq!(q["1"], 0);
    assert_eq!(f2["1"], 1);
    assert_eq!(
        serre(&["--field", "fp:4", "complex", "depth"], &rp2)
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn emitted_json_reads_back() {
    let dual = stdout(&serre(&["--json", "complex", "dual"], C4));
    assert_eq!(
        read_complex(&dual).unwrap(),
        families::c4().alexander_dual()
    );
    let sr = stdout(&serre(&["--json", "complex", "sr-ideal"], C4));
    assert_eq!(read_ideal(&sr, None).unwrap().to_string(), "x1*x3, x2*x4");
    let text = stdout(&serre(&["complex", "sr-ideal"], C4));
    assert_eq!(
        read_ideal(&text, Some(4)).unwrap(),
        read_ideal(&sr, None).unwrap()
    );
    let p4 = r#"{"n": 4, "edges": [[1,2],[2,3],[3,4]]}"#;
    let gl = stdout(&serre(&["--json", "graph", "gl", "--ell", "2"], p4));
    assert_eq!(read_graph(&gl).unwrap().n(), 8);
    let profile = stdout(&serre(&["--json", "complex", "profile"], C4));
    assert_eq!(profile, r#"{"0":null,"1":null,"2":2}"#);
}

#[test]
fn inline_ideals() {
    assert_eq!(
        stdout(&serre(&["ideal", "depth", "--ideal", "x1^2"], "")),
        "0"
    );
    let o = serre(&["ideal", "polarize", "--ideal", "x1^2, x1*x2, x2^2"], "");
    assert!(
        stdout(&o).starts_with("x1*x3, x2*x4, x3*x4"),
        "{}",
        stdout(&o)
    );
    assert_eq!(
        stdout(&serre(
            &["ideal", "symbolic-power", "--ell", "2", "--ideal", "x1*x2"],
            ""
        )),
        "x1^2*x2^2"
    );
}

#[test]
fn graph_commands() {
    let k22 = r#"{"n": 4, "edges": [[1,3],[1,4],[2,3],[2,4]]}"#;
    assert_eq!(
        stdout(&serre(&["graph", "vwc-depth", "--r", "2"], k22)),
        "1"
    );
    assert_eq!(stdout(&serre(&["graph", "im"], k22)), "1");
    assert_eq!(
        stdout(&serre(&["graph", "cover-ideal"], k22)),
        "x1*x2, x3*x4"
    );
    let c5 = r#"{"n": 5, "edges": [[1,2],[2,3],[3,4],[4,5],[1,5]]}"#;
    assert_eq!(
        serre(&["graph", "vwc-depth", "--r", "2"], c5).status.code(),
        Some(1)
    );
}

#[test]
fn malformed_input_reports_location() {
    let o = serre(&["complex", "depth"], "{\"n\": 4,\n \"facets\": [[1,2],]}");
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
    let o = serre(&["ideal", "depth", "--ideal", "x1*y2"], "");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_with_one() {
    assert_eq!(serre(&["complex", "bogus"], "").status.code(), Some(1));
    assert_eq!(
        serre(&["complex", "serre-depth"], C4).status.code(),
        Some(1)
    );
    assert_eq!(serre(&["--help"], "").status.code(), Some(0));
}

#[test]
fn single_verification_checks() {
    let o = serre(&["verify", "paper", "--only", "12-cover-polarization"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS 12-cover-polarization"));
    let o = serre(
        &[
            "--json",
            "verify",
            "paper",
            "--only",
            "03-dim1-classification",
        ],
        "",
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["checks"][0]["status"], "pass");
    assert_eq!(
        serre(&["verify", "paper", "--only", "nope"], "")
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn failing_check_exits_with_two() {
    // too small a budget for the degree enumeration
    let o = serre(
        &[
            "--max-enum",
            "10",
            "verify",
            "paper",
            "--only",
            "01-counterexample-d3",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("SKIP"));
}
