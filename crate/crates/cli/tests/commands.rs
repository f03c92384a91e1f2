use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seidelgf3")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn first_line(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out).lines().next().unwrap_or_default().to_string()
}

#[test]
fn charpoly_text() {
    assert_eq!(first_line(&["charpoly", "3*K2"]), "x^3*(x-1)^3");
    assert_eq!(first_line(&["charpoly", "E1"]), "x");
    assert_eq!(first_line(&["charpoly", "2*K2+K1"]), "x^1*(x-1)^2*(x+1)^0*[2,2,1]");
    let full = stdout(&run(&["charpoly", "2*K2+K1"]));
    assert!(full.contains("coeffs: [0,2,1,2,0,1]"));
    assert!(full.contains("factored: x*(x-1)^2*(x^2-x-1)"));
}

#[test]
fn charpoly_reads_graph6() {
    assert_eq!(first_line(&["charpoly", "g6:A_"]), first_line(&["charpoly", "K2"]));
    assert_eq!(first_line(&["charpoly", "Bw"]), "(x-1)^3");
    assert_eq!(first_line(&["charpoly", "--adjacency", "K2"]), "(x-1)*(x+1)");
}

#[test]
fn charpoly_json() {
    let line = first_line(&["--json", "charpoly", "K3"]);
    let v: serde_json::Value = serde_json::from_str(&line).unwrap();
    assert_eq!(v["poly"], "(x-1)^3");
    assert_eq!(v["exponents"]["s"], 3);
    assert_eq!(v["remainder"], "[1]");
}

#[test]
fn parse_errors_exit_one() {
    let out = run(&["charpoly", "K3 +"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 4"));
}

#[test]
fn verify_passes() {
    for args in [
        &["verify", "thm1", "--random", "100", "--max-vertices", "7"][..],
        &["verify", "prop-d"],
        &["verify", "cn", "--random", "500"],
        &["verify", "unions", "--random", "30"],
        &["verify", "regular", "--random", "20"],
    ] {
        let line = first_line(args);
        assert!(line.ends_with("0 failures: pass"), "{args:?}: {line}");
    }
    assert_eq!(first_line(&["verify", "prop-d"]), "prop-d: 81 cases, 0 failures: pass");
}

#[test]
fn realize_outcomes_and_exit_codes() {
    assert_eq!(first_line(&["realize", "1", "0", "3"]), "witness: 4*K1");
    assert!(first_line(&["realize", "2", "0", "0"]).starts_with("unrealizable"));
    assert_eq!(first_line(&["realize", "27", "18", "0", "--extended"]), "witness: 3*L(K6)");
    assert_eq!(run(&["realize", "4", "0", "0"]).status.code(), Some(2));
    let json = first_line(&["--json", "realize", "3", "3", "3"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["status"], "witness");
    assert_eq!(v["verified"], true);
    assert_eq!(v["witness"]["params"]["e"], 1);
}

#[test]
fn extended_flag_prefers_line_graph_families() {
    // (27,27,0) has r <= s + t, so the basic construction applies as well.
    assert_eq!(first_line(&["realize", "27", "27", "0", "--extended"]), "witness: 3*L(K6) + 3*K3");
    assert_eq!(first_line(&["realize", "27", "27", "0"]), "witness: 9*(3*K2)");
}

#[test]
fn convert_both_ways() {
    assert_eq!(first_line(&["convert", "--to-g6", "K2"]), "A_");
    assert_eq!(first_line(&["convert", "--to-g6", "E0"]), "?");
    assert_eq!(first_line(&["convert", "--from-g6", "C~"]), "K4");
    let path = run(&["convert", "--from-g6", "Ch"]);
    assert_eq!(path.status.code(), Some(1));
}

#[test]
fn census_to_file() {
    let dir = std::env::temp_dir().join(format!("seidelgf3-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("c.jsonl");
    let summary =
        first_line(&["census", "--max-n", "5", "--jobs", "4", "--out", out.to_str().unwrap(), "--audit", "5"]);
    assert_eq!(summary, "1099 graphs, 12 records, 0 violations, audit pass");
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 13);
    assert_eq!(text.lines().last().unwrap(), r#"{"total":1099,"violations":[]}"#);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn census_refuses_large_orders() {
    let out = run(&["census", "--max-n", "8"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("limit"));
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        &["--seed", "7", "verify", "thm1", "--random", "40"][..],
        &["census", "--max-n", "4", "--jobs", "3"],
        &["--json", "--seed", "3", "verify", "unions", "--random", "10"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}
