use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilcommute"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn maxnil_prints_value_first() {
    let out = stdout(&["maxnil", "4,3,2,2,1"]);
    assert_eq!(out.lines().next(), Some("9"));
    let values: Vec<&str> = out
        .lines()
        .skip(2)
        .map(|l| l.rsplit('\t').next().unwrap())
        .collect();
    assert_eq!(values, ["7", "9", "9", "9"]);
    assert_eq!(stdout(&["maxnil", "6,4"]).lines().next(), Some("6"));
}

#[test]
fn maxnil_json_parses() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["maxnil", "4,3,3", "--json"])).unwrap();
    assert_eq!(v["value"], 10);
}

#[test]
fn delta_of_six_vertex_example() {
    let out = stdout(&["delta", &data("six_vertex.dag"), "--profile"]);
    assert_eq!(out, "3,2,1\nd_hat=0,3,5,6\n");
    assert_eq!(stdout(&["longest", &data("six_vertex.dag")]), "3\n");
}

#[test]
fn rp_lists_balanced_partitions() {
    assert_eq!(stdout(&["rp", "4"]), "4\n2,2\n2,1,1\n1,1,1,1\n");
    assert_eq!(stdout(&["rp", "7", "3"]), "3,2,2\n");
    assert_eq!(stdout(&["rpset", "4"]).lines().count(), 4);
    assert_eq!(
        run(&["rpset", "4", "--check", "3,1"]).status.code(),
        Some(1)
    );
}

#[test]
fn bpath_row() {
    let out = stdout(&["bpath", "4,3,2,2,1", "3"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[1], "3\t3\t5\t4\t9");
    assert_eq!(lines[2], "V_B: (3,1) (3,2) (4,1) (4,2) (5,1)");
    assert_eq!(
        lines[3],
        "vertices: (1,1) (2,1) (3,1) (3,2) (4,1) (4,2) (5,1) (1,4) (2,3)"
    );
}

#[test]
fn shape_reads_matrix_file() {
    assert_eq!(stdout(&["shape", &data("a3.txt")]), "3\n");
}

#[test]
fn sample_is_reproducible_and_json_has_schema() {
    let args = [
        "sample", "--shape", "3,2", "--trials", "200", "--seed", "9", "--json",
    ];
    let a = stdout(&args);
    let b = stdout(&[&args[..], &["--jobs", "1"]].concat());
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    for key in [
        "mu",
        "mode",
        "trials",
        "prime",
        "seed",
        "shapes",
        "witnesses",
    ] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn randomized_commands_print_header() {
    let out = stdout(&[
        "sample",
        "--shape",
        "2,1",
        "--mode",
        "subsample",
        "--values",
        "-1,1",
        "--trials",
        "10",
    ]);
    assert!(out.starts_with("# prime=2147483647 seed=0\n"));
    let out = stdout(&["verify-gs", &data("six_vertex.dag"), "--seed", "4"]);
    assert!(out.starts_with("# prime=2147483647 seed=4\n"));
    assert!(out.ends_with("agree\n"));
}

#[test]
fn pattern_round_trips_through_nbgraph() {
    let json = stdout(&["pattern", "4,2"]);
    let entries: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
    assert_eq!(entries.len(), 8);
    let path = std::env::temp_dir().join(format!("nilcommute-pattern-{}.json", std::process::id()));
    std::fs::write(&path, json).unwrap();
    let text = stdout(&["nbgraph", "4,2", "--params", path.to_str().unwrap()]);
    assert_eq!(text.lines().next(), Some("6"));
    let dot = stdout(&[
        "nbgraph",
        "4,2",
        "--params",
        path.to_str().unwrap(),
        "--dot",
    ]);
    assert!(dot.contains("label=\"(2,1)\""));
    std::fs::remove_file(path).ok();
}

#[test]
fn example_suite_passes() {
    let out = stdout(&["paper-suite"]);
    assert!(out.trim_end().ends_with("0 failed"), "{out}");
}

#[test]
fn usage_errors_exit_two_and_name_token() {
    let out = run(&["maxnil", "4,x,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("`x`"));
    let out = run(&["shape", &data("a3.txt"), "--prime", "15"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("`15`"));
    let out = run(&["delta", &data("cyclic.dag")]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}
