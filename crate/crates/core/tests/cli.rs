//! End-to-end runs of the `ctk` binary: file formats, reports, and exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn ctk() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_ctk"));
    c.env_remove("CTK_ENUM_CAP");
    c
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(cmd: &mut Command) -> (i32, String, String) {
    let Output { status, stdout, stderr } = cmd.output().unwrap();
    (
        status.code().unwrap(),
        String::from_utf8(stdout).unwrap(),
        String::from_utf8(stderr).unwrap(),
    )
}

#[test]
fn table_then_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("q8.ctab");
    let (code, _, err) = run(ctk().args(["table", "--gens"]).arg(fixture("q8.gens")).arg("--out").arg(&table));
    assert_eq!(code, 0, "{err}");
    let text = std::fs::read_to_string(&table).unwrap();
    assert!(text.starts_with("CHARTABLE v1\nname: Q8\norder: 8\n"));
    assert!(text.contains("X5: 2 -2 0 0 0"));

    let (code, out, _) = run(ctk().args(["analyze", "--json", "--table"]).arg(&table));
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["theta"], "3/4");
    assert_eq!(v["theta_prime"], "1");
    assert_eq!(v["theta_decimal"], "0.7500000000");
}

#[test]
fn analyze_from_generators_detects_nilpotency() {
    let (code, out, _) = run(ctk().args(["analyze", "--json", "--gens"]).arg(fixture("e27.gens")));
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["nilpotent"], true);
    let names: Vec<&str> = v["verdicts"].as_array().unwrap().iter().map(|x| x["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"zeros_theorem"));
    assert!(v["verdicts"].as_array().unwrap().iter().all(|x| x["passed"] == true));
}

#[test]
fn false_nilpotency_claim_fails_verification() {
    let (code, out, _) = run(ctk().args(["analyze", "--nilpotent", "--gens"]).arg(fixture("s3.gens")));
    assert_eq!(code, 4);
    assert!(out.contains("[FAIL] zeros_theorem"));
}

#[test]
fn product_of_table_files() {
    let dir = tempfile::tempdir().unwrap();
    let (q8, c3, prod) = (dir.path().join("q8.ctab"), dir.path().join("c3.ctab"), dir.path().join("p.ctab"));
    for (gens, out) in [("q8.gens", &q8), ("c3.gens", &c3)] {
        assert_eq!(run(ctk().args(["table", "--gens"]).arg(fixture(gens)).arg("--out").arg(out)).0, 0);
    }
    let (code, _, err) = run(ctk().arg("product").arg(&q8).arg(&c3).arg("--out").arg(&prod));
    assert_eq!(code, 0, "{err}");
    let text = std::fs::read_to_string(&prod).unwrap();
    assert!(text.contains("name: Q8xC3\norder: 24\nclasses: 15\n"));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = ["analyze", "--json", "--gens"];
    let a = run(ctk().args(args).arg(fixture("a6.gens"))).1;
    let b = run(ctk().args(args).arg(fixture("a6.gens"))).1;
    assert_eq!(a, b);
    let a = run(ctk().args(["family", "l2", "--up-to", "500", "--json"])).1;
    let b = run(ctk().args(["family", "l2", "--up-to", "500", "--json"])).1;
    assert_eq!(a, b);
}

#[test]
fn enumeration_cap_flag_and_environment() {
    let (code, _, err) = run(ctk().args(["table", "--cap", "100", "--gens"]).arg(fixture("a6.gens")));
    assert_eq!(code, 3);
    assert!(err.contains("100"));
    let (code, _, _) = run(ctk().env("CTK_ENUM_CAP", "50").args(["table", "--gens"]).arg(fixture("a5.gens")));
    assert_eq!(code, 3);
    let (code, _, _) = run(ctk().env("CTK_ENUM_CAP", "60").args(["table", "--gens"]).arg(fixture("a5.gens")));
    assert_eq!(code, 0);
    let (code, _, _) = run(ctk().env("CTK_ENUM_CAP", "lots").args(["table", "--gens"]).arg(fixture("a5.gens")));
    assert_eq!(code, 1);
}

#[test]
fn parse_errors_exit_two_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.gens");
    std::fs::write(&bad, "name: X\ndomain: 4\n(0 1 9)\n").unwrap();
    let (code, _, err) = run(ctk().args(["table", "--gens"]).arg(&bad));
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");

    let bad = dir.path().join("bad.ctab");
    std::fs::write(&bad, "CHARTABLE v1\nname: x\norder: 2\nclasses: 2\nclasssizes: 1 1\nelementorders: 1 2\nX1: 1 1\nX2: 1 E(\n").unwrap();
    let (code, _, err) = run(ctk().args(["analyze", "--table"]).arg(&bad));
    assert_eq!(code, 2);
    assert!(err.contains("line 8"), "{err}");
}

#[test]
fn invalid_tables_exit_four() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.ctab");
    std::fs::write(&bad, "CHARTABLE v1\nname: x\norder: 2\nclasses: 2\nclasssizes: 1 1\nelementorders: 1 2\nX1: 1 1\nX2: 1 1\n").unwrap();
    let (code, _, err) = run(ctk().args(["analyze", "--table"]).arg(&bad));
    assert_eq!(code, 4);
    assert!(err.contains("orthogonality"), "{err}");
}

#[test]
fn usage_and_io_errors_exit_one() {
    assert_eq!(run(&mut ctk()).0, 1);
    assert_eq!(run(ctk().args(["verify", "everything"])).0, 1);
    assert_eq!(run(ctk().args(["table", "--gens", "/nonexistent/x.gens"])).0, 1);
    assert_eq!(run(ctk().args(["family", "alt", "--n", "12"])).0, 1);
    assert_eq!(run(ctk().args(["family", "l2", "--q", "3"])).0, 1);
}

#[test]
fn family_commands() {
    let (code, out, _) = run(ctk().args(["family", "suz", "--q", "8"]));
    assert_eq!(code, 0);
    assert!(out.contains("theta = 2377/4160 ~ 0.5713942308"), "{out}");
    assert!(out.contains("theta' = 8/11 ~ 0.7272727273"));
    let (code, out, _) = run(ctk().args(["family", "l2", "--q", "5"]));
    assert_eq!(code, 0);
    assert!(out.contains("|G| = 60, |Cl| = 5, |G0| = 15, |G1| = 20"), "{out}");
    let (code, out, _) = run(ctk().args(["family", "alt", "--n", "6"]));
    assert_eq!(code, 0);
    assert!(out.contains("[pass] irrational_value_law"));
}

#[test]
fn verify_suites_on_shipped_fixtures() {
    let (code, out, _) = run(ctk().args(["verify", "all", "--fixtures"]).arg(fixture("")));
    assert_eq!(code, 0, "{out}");
    assert!(out.ends_with("0 failed\n"), "{out}");
    let (code, out, _) = run(ctk().args(["verify", "congruence"]));
    assert_eq!(code, 0);
    assert!(out.contains("root sums: 1 checks pass"));
}
