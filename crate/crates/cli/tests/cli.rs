use std::io::Write;
use std::process::{Command, Output, Stdio};

fn eil(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eil")).args(args).output().unwrap()
}

fn eil_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_eil"))
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
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

const WK3: &str = "x1 x2\nx1 x3\nx2 x3\nx1 z1\nx2 z2\nx3 z3\n";

#[test]
fn alpha2_of_whiskered_triangle() {
    let o = eil_stdin(&["alpha2", "--edges", "-"], WK3);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "alpha2=3 centers={z1,z2,z3}");
}

#[test]
fn alpha2_of_edgeless_graph() {
    let o = eil(&["alpha2", "C?"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("alpha2=4"));
}

#[test]
fn bad_graph6_is_a_usage_error() {
    let o = eil(&["alpha2", "Z~"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("byte"));
}

#[test]
fn depth_lines() {
    let o = eil_stdin(&["depth", "--edges", "-", "--power", "2"], "a b\nb c\nc d\n");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("depth=2 bound=2 slack=0"), "{}", stdout(&o));

    let o = eil(&["depth", "A_", "--power", "1"]);
    assert!(stdout(&o).starts_with("depth=2 bound=2"));

    let o = eil(&["depth", "Bw", "--symbolic", "--field", "both"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("depth=2 bound=1 slack=1"), "{}", stdout(&o));

    assert_eq!(eil(&["depth", "Bw", "--power", "3"]).status.code(), Some(2));
    assert_eq!(
        eil(&["depth", "Bw", "--power", "1", "--symbolic"]).status.code(),
        Some(2)
    );
}

#[test]
fn examples_table() {
    let o = eil(&["examples", "--field", "both"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 6);
    assert!(text.lines().all(|l| l.ends_with("sharp=yes")));
    assert!(text.contains("graph=whiskered_triangle graph6=E{O_ alpha2=3 depth=1 bound=1"));
}

#[test]
fn verify_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("r.json");
    let o = eil(&[
        "verify",
        "--suite",
        "main",
        "--max-n",
        "5",
        "-o",
        json.to_str().unwrap(),
        "--no-timings",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let body: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    for key in ["corpus", "field_char", "seed", "outcomes", "summary"] {
        assert!(body.get(key).is_some(), "missing {key}");
    }
    assert_eq!(body["summary"]["fails"], 0);

    let csv = dir.path().join("r.csv");
    let o = eil(&[
        "verify",
        "--suite",
        "examples",
        "--max-n",
        "1",
        "--format",
        "csv",
        "-o",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(std::fs::read_to_string(&csv)
        .unwrap()
        .starts_with("check_id,graph_id,status"));
}

#[test]
fn verify_is_deterministic() {
    let run = || {
        stdout(&eil_stdin(
            &["verify", "--suite", "all", "--input", "-", "--field", "both"],
            "Ch\nBw\nD{O\n",
        ))
    };
    assert_eq!(run(), run());
}

#[test]
fn verify_errors() {
    let o = eil_stdin(&["verify", "--input", "-"], "A_\nBw\nZZZ\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("corpus line 3"), "{}", stderr(&o));
    assert_eq!(
        eil(&["verify", "--suite", "bogus", "--max-n", "3"]).status.code(),
        Some(2)
    );
}

#[test]
fn hunt_contract() {
    let o = eil(&[
        "hunt", "--check", "main1", "--n", "7", "--random", "100", "--seed", "7", "--jobs", "2",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("fails=0"));
    let o = eil(&["hunt", "--check", "main1", "--n", "40", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("cap"));
    assert_eq!(eil(&["hunt", "--check", "main1", "--n", "7"]).status.code(), Some(2));
}

#[test]
fn catalog_counts() {
    let o = eil(&["catalog", "--max-n", "5"]);
    assert_eq!(stdout(&o).lines().count(), 52);
}
