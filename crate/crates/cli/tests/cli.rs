//! End-to-end tests of the command-line interface: formats, exit codes, and
//! determinism of the reports.

use std::process::{Command, Output};

fn drumgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_drumgraph"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn stdout_json(args: &[&str]) -> serde_json::Value {
    let out = drumgraph(args);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout should be JSON")
}

#[test]
fn generate_schrijver_dot_has_nine_nodes() {
    let out = drumgraph(&["generate", "--family", "schrijver", "--n", "6", "--k", "2", "--format", "dot"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let node_lines = text.lines().filter(|l| l.ends_with("\";") && !l.contains("--")).count();
    assert_eq!(node_lines, 9);
    assert_eq!(text.matches(" -- ").count(), 18);
}

#[test]
fn generate_reduced_drum_json_counts() {
    let v = stdout_json(&["generate", "--family", "reduced_drum", "--h", "4", "--n", "8"]);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 16);
}

#[test]
fn generate_y3_counts() {
    let v = stdout_json(&["generate", "--family", "Y", "--k", "3"]);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 16);
    assert_eq!(v["edges"].as_array().unwrap().len(), 32);
}

#[test]
fn bad_parameters_exit_2() {
    let out = drumgraph(&["generate", "--family", "schrijver", "--n", "3", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = drumgraph(&["generate", "--family", "schrijver", "--n", "6"]);
    assert_eq!(out.status.code(), Some(2));
    // Unknown flags are usage errors too (clap's own exit code).
    let out = drumgraph(&["generate", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn chromatic_reports_dichotomy_values() {
    let v = stdout_json(&["chromatic", "--family", "reduced_drum", "--h", "3", "--n", "8"]);
    assert_eq!(v["chromatic_number"], 2);
    let v = stdout_json(&["chromatic", "--family", "X", "--h", "2", "--n", "6"]);
    assert_eq!(v["chromatic_number"], 4);
}

#[test]
fn verify_iso_passes_and_reports() {
    let out = drumgraph(&["verify", "--suite", "iso", "--k", "5"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "pass");
    assert!(String::from_utf8_lossy(&out.stderr).contains("suite iso: pass"));
}

#[test]
fn verify_quad_z_passes() {
    let out = drumgraph(&["verify", "--suite", "quad", "--family", "Z", "--k", "4"]);
    assert!(out.status.success());
}

#[test]
fn verify_winding_is_deterministic() {
    let a = drumgraph(&["verify", "--suite", "winding", "--seed", "11"]);
    let b = drumgraph(&["verify", "--suite", "winding", "--seed", "11"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn critical_compare_6_2_exits_clean() {
    let out = drumgraph(&["critical", "--n", "6", "--k", "2", "--compare"]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 18);
    assert!(String::from_utf8_lossy(&out.stderr).contains("0 mismatches"));
}

#[test]
fn critical_single_edge_prediction() {
    // Sweep the predictions first, then re-query one concrete edge.
    let sweep = drumgraph(&["critical", "--n", "8", "--k", "3", "--predict"]);
    assert!(sweep.status.success());
    let v: serde_json::Value = serde_json::from_slice(&sweep.stdout).unwrap();
    let first = &v.as_array().unwrap()[0];
    let edge = format!("{},{}", first["edge"][0], first["edge"][1]);
    let single = drumgraph(&["critical", "--n", "8", "--k", "3", "--edge", &edge, "--compare"]);
    assert!(single.status.success());
    let w: serde_json::Value = serde_json::from_slice(&single.stdout).unwrap();
    assert_eq!(w[0]["edge"], first["edge"]);
    assert!(w[0]["brute"].is_boolean());
}

#[test]
fn winding_subcommand_computes_signed_value() {
    let coloring = r#"{"0":0,"1":1,"2":2,"3":0,"4":1,"5":2}"#;
    let v = stdout_json(&[
        "winding",
        "--family",
        "mobius",
        "--n",
        "6",
        "--cycle",
        "0,1,2,3,4,5",
        "--coloring",
        coloring,
    ]);
    assert_eq!(v["winding"], 2);
    assert_eq!(v["absolute_winding"], 2);
}

#[test]
fn winding_accepts_coloring_from_file() {
    let dir = std::env::temp_dir().join("drumgraph-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("coloring.json");
    std::fs::write(&path, r#"{"0":0,"1":1,"2":2,"3":0,"4":1,"5":2}"#).unwrap();
    let v = stdout_json(&[
        "winding", "--family", "mobius", "--n", "6",
        "--cycle", "0,1,2,3,4,5", "--coloring-file", path.to_str().unwrap(),
    ]);
    assert_eq!(v["winding"], 2);
    std::fs::remove_file(&path).ok();
}

#[test]
fn winding_rejects_monochromatic_cycle_edges() {
    let coloring = r#"{"0":0,"1":0,"2":2,"3":0,"4":1,"5":2}"#;
    let out = drumgraph(&[
        "winding", "--family", "mobius", "--n", "6",
        "--cycle", "0,1,2,3,4,5", "--coloring", coloring,
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn export_writes_file() {
    let dir = std::env::temp_dir().join("drumgraph-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("z2.json");
    let out = drumgraph(&[
        "export", "--family", "Z", "--k", "2", "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["family"], "Z");
    assert_eq!(v["vertices"].as_array().unwrap().len(), 9);
    std::fs::remove_file(&path).ok();
}

#[test]
fn color_construct_uk_minus_with_extension() {
    let v = stdout_json(&[
        "color-construct", "--construction", "uk-minus", "--k", "4",
        "--a", "1", "--b", "6", "--extend",
    ]);
    assert!(v["gadget"]["colors"].is_object());
    assert!(v["extended"]["colors"].is_object());
}

#[test]
fn color_construct_uk_minus_k3_middle_edge_fails_cleanly() {
    let out = drumgraph(&[
        "color-construct", "--construction", "uk-minus", "--k", "3",
        "--a", "2", "--b", "5",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no such coloring"));
}

#[test]
fn quad_u_family_reports_graph_only() {
    let v = stdout_json(&["quad", "--family", "U", "--k", "4"]);
    assert_eq!(v["V"], 20);
    assert!(v["embedding"].is_null());
}
