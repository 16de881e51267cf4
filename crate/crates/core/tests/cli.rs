use std::path::PathBuf;
use std::process::{Command, Output};

fn bpchi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bpchi")).args(args).output().unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("bpchi-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn path(p: &PathBuf) -> &str {
    p.to_str().unwrap()
}

#[test]
fn unknown_suite_is_a_usage_error() {
    assert_eq!(bpchi(&["suite", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(bpchi(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn named_suites_pass() {
    for name in ["cube", "peck"] {
        let out = bpchi(&["suite", "--suite", name]);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn truncated_dimacs_names_the_line() {
    let g = scratch("truncated.col");
    std::fs::write(&g, "c triangle\np edge 3 3\ne 1 2\ne 2 3\n").unwrap();
    let out = bpchi(&["alpha", "--graph", path(&g)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 5"));
}

#[test]
fn partition_round_trips_and_verifies() {
    let g = scratch("g2.col");
    let p = scratch("g2.sys");
    assert!(bpchi(&["build-g", "--n", "2", "--out", path(&g)]).status.success());
    assert!(bpchi(&["partition", "--n", "2", "--out", path(&p)]).status.success());
    let out = bpchi(&["verify", "--graph", path(&g), "--partition", path(&p)]);
    assert_eq!(out.status.code(), Some(0));
    let cert: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(cert["verdict"], "pass");

    // Dropping one biclique leaves edges uncovered.
    let text = std::fs::read_to_string(&p).unwrap();
    let mut lines: Vec<&str> = text.lines().collect();
    let last = lines.iter().rposition(|l| l.starts_with('b')).unwrap();
    lines.remove(last);
    let header = lines.iter().position(|l| l.starts_with("p ")).unwrap();
    let fields: Vec<&str> = lines[header].split_whitespace().collect();
    let fixed = format!("p bicliques {} {} {}", fields[2], fields[3], fields[4].parse::<usize>().unwrap() - 1);
    lines[header] = &fixed;
    std::fs::write(&p, lines.join("\n") + "\n").unwrap();
    assert_eq!(bpchi(&["verify", "--graph", path(&g), "--partition", path(&p)]).status.code(), Some(1));
}

#[test]
fn vertex_limit_is_a_resource_error() {
    assert_eq!(bpchi(&["build-g", "--n", "4", "--vertex-limit", "10000"]).status.code(), Some(3));
}

#[test]
fn peck_and_reverse_construction() {
    let out = bpchi(&["peck", "--d", "4", "--t", "2"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "17");
    let g = scratch("p4.col");
    std::fs::write(&g, "p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n").unwrap();
    assert_eq!(bpchi(&["build-h", "--graph", path(&g)]).status.code(), Some(0));
}

#[test]
fn protocol_matches_instance() {
    let g = scratch("k3.col");
    let p = scratch("k3.sys");
    let inst = scratch("k3.json");
    std::fs::write(&g, "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n").unwrap();
    assert!(bpchi(&["bp", "--graph", path(&g), "--out", path(&p)]).status.success());
    assert!(bpchi(&["instance", "--partition", path(&p), "--out", path(&inst)]).status.success());
    let out = bpchi(&["protocol", "--instance", path(&inst), "--clique", "0", "--independent", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(bpchi(&["chi-bound", "--graph", path(&g), "--partition", path(&p)]).status.code(), Some(0));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let a = bpchi(&["cover-power", "--n", "2", "--t", "1"]);
    let b = bpchi(&["cover-power", "--n", "2", "--t", "1"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
