//! Runs the example programs that `cargo test` builds next to this binary.

use std::path::PathBuf;
use std::process::Command;

fn example(name: &str) -> PathBuf {
    let exe = std::env::current_exe().expect("test binary path");
    let dir = exe.parent().and_then(|d| d.parent()).expect("target profile dir");
    dir.join("examples")
        .join(format!("{name}{}", std::env::consts::EXE_SUFFIX))
}

fn run(name: &str, args: &[&str]) -> String {
    let path = example(name);
    let out = Command::new(&path)
        .args(args)
        .output()
        .unwrap_or_else(|e| panic!("cannot run {}: {e}", path.display()));
    let stdout = String::from_utf8_lossy(&out.stdout).into_owned();
    assert!(
        out.status.success(),
        "{name} {args:?} exited with {}\n{stdout}\n{}",
        out.status,
        String::from_utf8_lossy(&out.stderr)
    );
    stdout
}

#[test]
fn enumerate_counts() {
    let out = run("enumerate", &["3", "2"]);
    assert!(
        out.lines().any(|l| l.starts_with("s_prime") && l.contains("1 1 1")),
        "{out}"
    );
}

#[test]
fn distributivity_search() {
    assert!(run("distributivity", &["4"]).contains("none up to size 4"));
}

#[test]
fn square_laws_probe() {
    assert!(run("square_laws", &["4"]).contains("without 3-potency"));
}

#[test]
fn check_proof_replays_rejection() {
    let out = run("check_proof", &[]);
    assert!(
        out.contains("AND_L2_HISTORICAL is only admissible in historical mode"),
        "{out}"
    );
}

#[test]
fn algebra_reports() {
    let out = run("algebra_check", &[]);
    assert!(out.contains("s-def34"), "{out}");
}

#[test]
fn compile_calculus_prints_conditions() {
    let out = run("compile_calculus", &["1"]);
    assert!(out.contains("E(N1)") && out.contains("==>"), "{out}");
}

#[test]
fn deduction_discharges() {
    let out = run("deduction", &["3"]);
    assert!(out.contains("A12'"), "{out}");
}

#[test]
fn countermodel_search() {
    let out = run("countermodel", &["x * x = x", "s_prime", "3"]);
    assert!(out.contains("x=a"), "{out}");
}

#[test]
fn n4_lattices_report() {
    let out = run("n4_lattices", &[]);
    assert!(out.contains("size 4: 2 N3-lattice(s), 2 of them S-algebras"), "{out}");
}

#[test]
fn demo_items() {
    for item in ["inconsistency", "mv3", "prop5.3"] {
        let out = run("demo", &[item]);
        assert!(out.contains(&format!("demo {item}: PASS")), "{out}");
    }
}

#[test]
fn export_round_trips() {
    let dir = std::env::temp_dir().join(format!("nelson-export-{}", std::process::id()));
    run("export_fixtures", &[dir.to_str().expect("utf-8 temp path")]);
    for (name, text) in nelson::fixtures::BUNDLED {
        let written = std::fs::read_to_string(dir.join(name)).expect("exported file");
        assert_eq!(&written, text, "{name}");
    }
    std::fs::remove_dir_all(&dir).ok();
}
