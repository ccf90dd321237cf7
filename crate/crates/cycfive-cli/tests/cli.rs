//! End-to-end CLI behaviour: JSON fields, exit codes, error messages.

use std::process::{Command, Output};

fn corpus(name: &str) -> String {
    format!("{}/../../corpus/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cycfive"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_stdin(args: &[&str], stdin: &str) -> Output {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_cycfive"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON report")
}

#[test]
fn analyze_petersen() {
    let out = run(&["analyze", &corpus("petersen.adj")]);
    let v = json(&out);
    assert_eq!(v["command"], "analyze");
    assert_eq!(v["input"]["format"], "adjlist");
    assert_eq!(v["results"]["girth"], 5);
    assert_eq!(v["results"]["cycle_rank"], 6);
    assert_eq!(v["results"]["zeta"], 5);
    assert_eq!(v["results"]["witness"].as_array().unwrap().len(), 5);
    assert!(v.get("timings_ms").is_none());
}

#[test]
fn analyze_k4_has_no_witness() {
    let out = run(&["analyze", &corpus("k4.adj")]);
    let v = json(&out);
    assert_eq!(v["results"]["girth"], 3);
    assert_eq!(v["results"]["cycle_rank"], 3);
    assert_eq!(v["results"]["zeta"], 3);
    assert!(v["results"]["witness"].is_null());
    assert!(v["results"]["fragments"].is_null());
}

#[test]
fn analyze_reads_graph6_and_stdin() {
    let out = run(&["analyze", &corpus("petersen.g6")]);
    let v = json(&out);
    assert_eq!(v["input"]["format"], "graph6");
    assert_eq!(v["results"]["zeta"], 5);

    let out = run_stdin(&["analyze", "-"], "IheA@GUAo\n");
    let v = json(&out);
    assert_eq!(v["results"]["zeta"], 5);
}

#[test]
fn analyze_malformed_input_exits_2() {
    let out = run_stdin(&["analyze", "-"], "this is not a graph !!\n");
    assert_eq!(out.status.code(), Some(2));
    let out = run_stdin(&["analyze", "-"], "");
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["analyze", &corpus("no_such_file.adj")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_non_cubic_exits_3() {
    let out = run(&["analyze", &corpus("c5_part.adj")]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not cubic"));
}

#[test]
fn complete_part_reports_perm_and_verdicts() {
    let out = run(&["complete", &corpus("petersen_part.adj"), "--part"]);
    let v = json(&out);
    assert_eq!(v["results"]["zeta"], 5);
    assert_eq!(v["results"]["girth"], 5);
    assert_eq!(v["results"]["repaired"], false);
    assert!(v["results"]["repair_branch"].is_null());
    assert_eq!(v["results"]["final_perm"].as_array().unwrap().len(), 5);
    assert_eq!(v["results"]["added_vertices"], serde_json::json!([7, 8, 9]));
}

#[test]
fn complete_reports_the_repair_branches() {
    let out = run(&[
        "complete",
        &corpus("waisted_part_two_connected.adj"),
        "--part",
    ]);
    let v = json(&out);
    assert_eq!(v["results"]["repaired"], true);
    assert_eq!(v["results"]["repair_branch"], "two_connected");
    assert_eq!(v["results"]["zeta"], 5);

    let out = run(&["complete", &corpus("waisted_part_bridged.adj"), "--part"]);
    let v = json(&out);
    assert_eq!(v["results"]["repaired"], true);
    assert_eq!(v["results"]["repair_branch"], "bridged");
    assert_eq!(v["results"]["zeta"], 5);
}

#[test]
fn complete_five_cycle_part_exits_4() {
    let out = run(&["complete", &corpus("c5_part.adj"), "--part"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("five-cycle part"));
}

#[test]
fn complete_invalid_part_exits_3() {
    // A cubic graph is not a cyclic part (no degree-2 vertices).
    let out = run(&["complete", &corpus("petersen.adj"), "--part"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn complete_emits_dot_with_highlights() {
    let out = run(&[
        "complete",
        &corpus("two_parts_join.adj"),
        "--cut-side",
        "0",
        "--emit",
        "dot",
    ]);
    let v = json(&out);
    assert_eq!(v["results"]["emitted"]["format"], "dot");
    let text = v["results"]["emitted"]["text"].as_str().unwrap();
    assert!(text.starts_with("graph cycfive {"));
    assert!(text.contains("lightcoral"));
    assert!(text.contains("lightblue"));
    assert!(text.contains("x="));
    assert!(text.contains("--"));
}

#[test]
fn complete_emits_graph6_and_writes_out_file() {
    let dir = std::env::temp_dir().join("cycfive-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("completed.g6");
    let out = run(&[
        "complete",
        &corpus("petersen_part.adj"),
        "--part",
        "--emit",
        "graph6",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    let v = json(&out);
    let emitted = v["results"]["emitted"]["text"].as_str().unwrap();
    let written = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(emitted, written);
    // The completed part is the Petersen graph again, up to labelling.
    let g = cycfive::parse_graph(&written, cycfive::GraphFormat::Graph6, true).unwrap();
    assert!(cycfive::iso::are_isomorphic(
        &g,
        &cycfive::named::petersen()
    ));
}

#[test]
fn decompose_join_gives_two_seven_vertex_parts() {
    let out = run(&["decompose", &corpus("two_parts_join.adj")]);
    let v = json(&out);
    assert_eq!(v["results"]["zeta"], 5);
    let parts = v["results"]["parts"].as_array().unwrap();
    assert_eq!(parts.len(), 2);
    for p in parts {
        assert_eq!(p["vertices"], 7);
        assert_eq!(p["boundary"].as_array().unwrap().len(), 5);
    }
}

#[test]
fn decompose_petersen_gives_two_five_cycles() {
    let out = run(&["decompose", &corpus("petersen.adj")]);
    let v = json(&out);
    let parts = v["results"]["parts"].as_array().unwrap();
    assert_eq!(parts.len(), 2);
    for p in parts {
        assert_eq!(p["vertices"], 5);
    }
}

#[test]
fn decompose_k4_exits_3() {
    let out = run(&["decompose", &corpus("k4.adj")]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_petersen_passes() {
    let out = run(&["verify", &corpus("petersen.adj")]);
    let v = json(&out);
    assert_eq!(v["results"]["all_pass"], true);
    assert!(v["results"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["status"] != "fail"));
}

#[test]
fn verify_doctored_host_fails_with_named_clause() {
    let out = run(&["verify", &corpus("zeta4_host.adj"), "--expect-zeta", "5"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"]["all_pass"], false);
    let failing: Vec<&str> = v["results"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failing, vec!["expected_zeta"]);
}

#[test]
fn verify_non_cubic_input_skips_gracefully() {
    let out = run(&["verify", &corpus("c5_part.adj")]);
    let v = json(&out);
    assert_eq!(v["results"]["cubic"], false);
    assert_eq!(v["results"]["all_pass"], true);
}

#[test]
fn verify_empty_input_exits_2() {
    let out = run_stdin(&["verify", "-"], "");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_zeta_agrees_on_small_corpus() {
    for file in ["k4.adj", "k3_3.adj", "petersen.adj", "two_parts_join.adj"] {
        let out = run(&["oracle", &corpus(file), "--check", "zeta"]);
        let v = json(&out);
        assert_eq!(v["results"]["all_agree"], true, "{file}");
    }
}

#[test]
fn oracle_perms_on_parts() {
    let out = run(&["oracle", &corpus("c5_part.adj"), "--check", "perms"]);
    let v = json(&out);
    assert_eq!(v["results"]["all_agree"], true);
    assert_eq!(v["results"]["rows"][0]["oracle"], "0");

    let out = run(&["oracle", &corpus("petersen_part.adj"), "--check", "perms"]);
    let v = json(&out);
    assert_eq!(v["results"]["all_agree"], true);
    assert_eq!(v["results"]["rows"][0]["oracle"], "8");
}

#[test]
fn oracle_cuts_on_petersen() {
    let out = run(&["oracle", &corpus("petersen.adj"), "--check", "cuts"]);
    let v = json(&out);
    assert_eq!(v["results"]["all_agree"], true);
}

#[test]
fn oracle_oversized_input_exits_5() {
    // A 42-vertex circular ladder: 63 edges, over the oracle budget.
    let n = 42;
    let mut edges = Vec::new();
    for i in 0..n / 2 {
        edges.push((i, (i + 1) % (n / 2)));
        edges.push((n / 2 + i, n / 2 + (i + 1) % (n / 2)));
        edges.push((i, n / 2 + i));
    }
    let g = cycfive::CubicGraph::from_edges(n, &edges).unwrap();
    let out = run_stdin(&["oracle", "-", "--check", "zeta"], &g.to_adjlist());
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn timings_flag_adds_the_field() {
    let out = run(&["analyze", &corpus("k4.adj"), "--timings"]);
    let v = json(&out);
    assert!(v["timings_ms"]["total"].as_f64().unwrap() >= 0.0);
}
