//! End-to-end tests of the binary: formats, error paths, exit codes and
//! determinism.

use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

fn parkres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parkres"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_graph(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn c4_file() -> NamedTempFile {
    write_graph("1 2\n2 3\n3 4\n1 4\n")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn gens_json_shape() {
    let f = c4_file();
    let out = parkres(&["gens", f.path().to_str().unwrap(), "--format", "json"]);
    let v = stdout_json(&out);
    assert_eq!(v["result"]["generator_count"], 6);
    assert_eq!(v["manifest"]["sink"], 4);
    assert_eq!(v["manifest"]["command"], "gens");
    let redundant = v["result"]["redundant"].as_array().unwrap();
    assert_eq!(redundant.len(), 1);
    assert_eq!(redundant[0]["monomial"], "x1^2*x3^2");
}

#[test]
fn complex_json_coordinates_are_fraction_strings() {
    let f = c4_file();
    let out = parkres(&["complex", f.path().to_str().unwrap(), "--format", "json"]);
    let v = stdout_json(&out);
    assert_eq!(
        v["result"]["f_vector"],
        serde_json::json!([6, 8, 3])
    );
    let cells = v["result"]["cells"].as_array().unwrap();
    let with_coords: Vec<_> = cells
        .iter()
        .filter(|c| c["coordinates"].is_array())
        .collect();
    assert_eq!(with_coords.len(), 6);
    let coord_strings: Vec<String> = with_coords
        .iter()
        .flat_map(|c| c["coordinates"].as_array().unwrap().iter())
        .map(|s| s.as_str().unwrap().to_string())
        .collect();
    assert!(coord_strings.iter().any(|s| s == "1/3"));
    assert!(coord_strings.iter().all(|s| !s.contains('.')));
}

#[test]
fn resolve_exit_codes() {
    let f = c4_file();
    let ok = parkres(&[
        "resolve",
        f.path().to_str().unwrap(),
        "--verify",
        "--oracle",
    ]);
    assert_eq!(ok.status.code(), Some(0));

    // corrupted label: verification fails with exit code 2 and a witness
    let bad = parkres(&[
        "resolve",
        f.path().to_str().unwrap(),
        "--verify",
        "--oracle",
        "--corrupt-cell",
        "7",
        "--format",
        "json",
    ]);
    assert_eq!(bad.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&bad.stdout).unwrap();
    assert_eq!(v["result"]["verification"]["passed"], false);
    let checks = v["result"]["verification"]["checks"].as_array().unwrap();
    assert!(checks
        .iter()
        .any(|c| c["passed"] == false && c["witness"].is_string()));
}

#[test]
fn input_error_paths_exit_one() {
    // parse error with line number
    let f = write_graph("1 2\nnot an edge\n");
    let out = parkres(&["gens", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    // disconnected graph
    let f = write_graph("1 2\n3 4\n");
    let out = parkres(&["gens", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not connected"));

    // size bound refusal
    let edges: String = (1..12).map(|i| format!("{} {}\n", i, i + 1)).collect();
    let f = write_graph(&edges);
    let out = parkres(&["complex", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds the bound"));

    // missing file
    let out = parkres(&["gens", "/nonexistent/graph.txt"]);
    assert_eq!(out.status.code(), Some(1));

    // bad sandpile usage
    let f = c4_file();
    let out = parkres(&["sandpile", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let out = parkres(&[
        "sandpile",
        f.path().to_str().unwrap(),
        "--stabilize",
        "1,2",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn deterministic_output_modulo_wall_time() {
    let f = c4_file();
    let args = [
        "resolve",
        f.path().to_str().unwrap(),
        "--verify",
        "--oracle",
        "--format",
        "json",
        "--seed",
        "7",
    ];
    let strip = |out: &Output| -> String {
        String::from_utf8_lossy(&out.stdout)
            .lines()
            .filter(|l| !l.contains("wall_time_ms"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    let a = parkres(&args);
    let b = parkres(&args);
    assert!(a.status.success() && b.status.success());
    assert_eq!(strip(&a), strip(&b));
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["manifest"]["seed"], 7);
}

#[test]
fn dot_input_and_sink_override() {
    let f = write_graph("graph c4 {\n 1 -- 2;\n 2 -- 3;\n 3 -- 4;\n 1 -- 4;\n}\n");
    let out = parkres(&[
        "sandpile",
        f.path().to_str().unwrap(),
        "--group",
        "--format",
        "json",
        "--sink",
        "2",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["manifest"]["sink"], 2);
    assert_eq!(v["result"]["invariant_factors"], serde_json::json!(["4"]));
}

#[test]
fn stabilize_matches_simulation() {
    let f = c4_file();
    let out = parkres(&[
        "sandpile",
        f.path().to_str().unwrap(),
        "--stabilize",
        "2,0,0",
        "--format",
        "json",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["result"]["stabilized"], serde_json::json!([0, 1, 0]));
    assert_eq!(v["result"]["fire_counts"], serde_json::json!([1, 0, 0]));
}

#[test]
fn out_flag_writes_file() {
    let f = c4_file();
    let target = NamedTempFile::new().unwrap();
    let out = parkres(&[
        "whitney",
        f.path().to_str().unwrap(),
        "--format",
        "json",
        "--out",
        target.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(target.path()).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(
        v["result"]["simple"],
        serde_json::json!([1, -4, 6, -3])
    );
}

#[test]
fn gens_on_a_tree_is_the_variables() {
    let f = write_graph("1 2\n2 3\n");
    let out = parkres(&["gens", f.path().to_str().unwrap(), "--format", "json"]);
    let v = stdout_json(&out);
    let gens: Vec<&str> = v["result"]["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g["monomial"].as_str().unwrap())
        .collect();
    assert_eq!(gens, vec!["x2", "x1"]);
}

#[test]
fn dual_json_running_example() {
    let f = c4_file();
    let out = parkres(&["dual", f.path().to_str().unwrap(), "--format", "json"]);
    let v = stdout_json(&out);
    let gens: Vec<&str> = v["result"]["dual_generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g["monomial"].as_str().unwrap())
        .collect();
    assert_eq!(gens, vec!["x1*x2^2*x3^2", "x1^2*x2*x3^2", "x1^2*x2^2*x3"]);
    assert_eq!(
        v["result"]["subcomplex_census"],
        serde_json::json!([0, 2, 3])
    );
}
