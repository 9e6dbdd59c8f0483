use std::process::{Command, Output};

fn irrtop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_irrtop")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = vec!["--format", "json"];
    all.extend(args);
    let o = irrtop(&all);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn way_below_in_poset_t() {
    let o = irrtop(&["way-below", "poset-t", "1", "a"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "false");
    assert_eq!(json(&["way-below", "poset-t", "bot", "a"])["way_below"], true);
}

#[test]
fn catalog_properties_as_json() {
    let v = json(&["space", "info", "cofinite-nat"]);
    let text = v.to_string();
    assert!(text.contains("\"oplus\":false"), "{text}");
    assert!(text.contains("\"sup_sober\":true"), "{text}");
}

#[test]
fn suite_reports_counts() {
    let v = json(&["suite", "--max-points", "4"]);
    assert_eq!(v["spaces_checked"], 1 + 3 + 19 + 219);
    assert_eq!(v["passed"], true);
    let v = json(&["suite", "--max-points", "2", "--catalog"]);
    assert_eq!(v["passed"], true);
}

#[test]
fn derive_si_on_omega_plus_one() {
    let o = irrtop(&["derive-si", "omega-plus-one"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("gamma: 1"));
    let v = json(&["derive-si", "diamond"]);
    assert_eq!(v["gamma"], 0);
}

#[test]
fn convergence_from_net_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("net.json");
    std::fs::write(
        &path,
        r#"{"index": "nat", "prefix": [], "tail": {"kind": "monotone", "values": "n"}}"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let v = json(&["converge", "omega-plus-one", "--net", p, "--to", "inf"]);
    assert_eq!(v["topological"], false);
    assert_eq!(v["irr"], true);
    let v = json(&["converge", "cofinite-nat", "--net", p, "--to", "3"]);
    assert_eq!(v["topological"], true);
    assert_eq!(v["irr"], false);
}

#[test]
fn space_files_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("vee.json");
    std::fs::write(&path, r#"{"points": ["p", "q", "r"], "le": [["p", "q"], ["p", "r"]]}"#).unwrap();
    let o = irrtop(&["--format", "dot", "space", "info", path.to_str().unwrap()]);
    assert!(o.status.success());
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("\"p\" -> \"q\" [style=solid]"));
    assert!(dot.contains("style=dashed"));
}

#[test]
fn enumerate_counts_lines() {
    let o = irrtop(&["enumerate", "--max-points", "4", "--up-to-iso"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with('{')).count(), 16);
}

#[test]
fn counterexample_exit_codes() {
    assert_eq!(
        irrtop(&["counterexample", "--query", "sober ∧ ¬c_space", "--forbid"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        irrtop(&["counterexample", "--query", "sober", "--forbid"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(irrtop(&["counterexample", "--query", "bogus"]).status.code(), Some(2));
}

#[test]
fn usage_errors() {
    assert_eq!(irrtop(&["space", "info", "nope"]).status.code(), Some(2));
    assert_eq!(irrtop(&["way-below", "vee", "a", "zz"]).status.code(), Some(2));
    assert_eq!(irrtop(&["--format", "dot", "check", "vee"]).status.code(), Some(2));
    assert_eq!(irrtop(&["enumerate", "--max-points", "9"]).status.code(), Some(2));
}
