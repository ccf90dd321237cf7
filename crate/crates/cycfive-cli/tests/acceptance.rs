//! Acceptance criterion 9: every CLI command is fully deterministic on
//! the corpus. Each invocation runs twice and must produce byte-identical
//! stdout, stderr and exit status.

use std::process::{Command, Output};

fn corpus(name: &str) -> String {
    format!("{}/../../corpus/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[String]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cycfive"))
        .args(args)
        .env("CYCFIVE_THREADS", "2")
        .output()
        .expect("binary runs")
}

#[test]
fn criterion_9_byte_identical_cli_output() {
    let s = |v: &[&str]| -> Vec<String> { v.iter().map(|x| x.to_string()).collect() };
    let mut invocations: Vec<Vec<String>> = Vec::new();
    for file in [
        "k4.adj",
        "k3_3.adj",
        "petersen.adj",
        "petersen.g6",
        "dodecahedron.adj",
        "two_parts_join.adj",
        "c5_part.adj",
        "petersen_part.adj",
        "waisted_part_two_connected.adj",
        "waisted_part_bridged.adj",
        "zeta4_host.adj",
    ] {
        invocations.push(s(&["analyze", &corpus(file)]));
        invocations.push(s(&["verify", &corpus(file)]));
    }
    invocations.push(s(&["decompose", &corpus("two_parts_join.adj")]));
    invocations.push(s(&["decompose", &corpus("petersen.adj")]));
    invocations.push(s(&["decompose", &corpus("k4.adj")]));
    invocations.push(s(&["complete", &corpus("petersen_part.adj"), "--part"]));
    invocations.push(s(&["complete", &corpus("c5_part.adj"), "--part"]));
    invocations.push(s(&[
        "complete",
        &corpus("waisted_part_two_connected.adj"),
        "--part",
        "--emit",
        "dot",
    ]));
    invocations.push(s(&[
        "complete",
        &corpus("waisted_part_bridged.adj"),
        "--part",
        "--emit",
        "adjlist",
    ]));
    invocations.push(s(&[
        "complete",
        &corpus("two_parts_join.adj"),
        "--cut-side",
        "0",
        "--emit",
        "graph6",
    ]));
    invocations.push(s(&[
        "complete",
        &corpus("two_parts_join.adj"),
        "--cut-side",
        "1",
    ]));
    invocations.push(s(&[
        "verify",
        &corpus("zeta4_host.adj"),
        "--expect-zeta",
        "5",
    ]));
    invocations.push(s(&[
        "verify",
        &corpus("petersen.adj"),
        "--expect-zeta",
        "5",
    ]));
    for file in ["k4.adj", "k3_3.adj", "petersen.adj", "two_parts_join.adj"] {
        invocations.push(s(&["oracle", &corpus(file), "--check", "zeta"]));
        invocations.push(s(&["oracle", &corpus(file), "--check", "cuts"]));
    }
    for file in [
        "c5_part.adj",
        "petersen_part.adj",
        "waisted_part_bridged.adj",
    ] {
        invocations.push(s(&["oracle", &corpus(file), "--check", "perms"]));
    }

    let mut checked = 0;
    for args in &invocations {
        let first = run(args);
        let second = run(args);
        assert_eq!(
            first.status.code(),
            second.status.code(),
            "exit codes differ for {args:?}"
        );
        assert_eq!(first.stdout, second.stdout, "stdout differs for {args:?}");
        assert_eq!(first.stderr, second.stderr, "stderr differs for {args:?}");
        checked += 1;
    }
    println!("criterion 9 PASS: {checked} CLI invocations byte-identical across runs");
}
