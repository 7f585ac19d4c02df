// SPDX-License-Identifier: MIT OR Apache-2.0

use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn fvlocal(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fvlocal"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn zigzag(dir: &TempDir) {
    let o = fvlocal(&["generate", "--fixture", "zigzag", "-o", "z.json"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn zigzag_verifies() {
    let dir = TempDir::new().unwrap();
    zigzag(&dir);
    let o = fvlocal(&["verify", "z.json", "--report", "r.json"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("fail=0"));

    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    let checks = report["checks"].as_array().unwrap();
    let count = |v: &str| checks.iter().filter(|c| c["verdict"] == v).count() as u64;
    assert_eq!(report["summary"]["pass"], count("pass"));
    assert_eq!(report["summary"]["fail"], 0);
    assert_eq!(report["summary"]["excluded"], count("excluded"));
    assert_eq!(report["path_hash"].as_str().unwrap().len(), 64);
}

#[test]
fn verify_is_deterministic() {
    let dir = TempDir::new().unwrap();
    fvlocal(&["generate", "--random", "--seed", "11", "-o", "p.json"], dir.path());
    fvlocal(&["verify", "p.json", "--report", "a.json"], dir.path());
    fvlocal(&["verify", "p.json", "--report", "b.json"], dir.path());
    let a = std::fs::read(dir.path().join("a.json")).unwrap();
    let b = std::fs::read(dir.path().join("b.json")).unwrap();
    assert_eq!(a, b);
}

#[test]
fn zigzag_profile_csv() {
    let dir = TempDir::new().unwrap();
    zigzag(&dir);
    let o = fvlocal(&["profile", "z.json", "-t", "3", "--csv", "p.csv"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(dir.path().join("p.csv")).unwrap();
    assert_eq!(text, "x_left,x_right,ell,lambda,N\n0,1,1,1,1\n1,2,1,3,3\n2,3,1,1,1\n");
}

#[test]
fn zigzag_occupation() {
    let dir = TempDir::new().unwrap();
    zigzag(&dir);
    let o = fvlocal(
        &["occupation", "z.json", "-t", "3", "--from", "1", "--to", "2"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "theta=1 vartheta=3");
}

#[test]
fn failing_checks_exit_one() {
    let dir = TempDir::new().unwrap();
    zigzag(&dir);
    let o = fvlocal(&["verify", "z.json", "--tol", "1e-300"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL cov_"));
}

#[test]
fn fixture_parameters() {
    let dir = TempDir::new().unwrap();
    let o = fvlocal(
        &["generate", "--fixture", "cantor", "--params", "depth=2", "-o", "c.json"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("c.json")).unwrap()).unwrap();
    assert_eq!(doc["breakpoints"].as_array().unwrap().len(), 10);
    assert_eq!(doc["metadata"]["fixture"], "cantor");
}

#[test]
fn malformed_input_exits_two() {
    let dir = TempDir::new().unwrap();
    let write = |name: &str, text: &str| std::fs::write(dir.path().join(name), text).unwrap();
    write(
        "missing.json",
        r#"{"schema_version":1,"horizon":1,"breakpoints":[0,1],"segments":[[0,1]]}"#,
    );
    write(
        "gap.json",
        r#"{"schema_version":1,"horizon":2,"breakpoints":[0,1,2],"segments":[[0,1],[5]],"jumps":[]}"#,
    );
    write(
        "version.json",
        r#"{"schema_version":9,"horizon":1,"breakpoints":[0,1],"segments":[[0,1]],"jumps":[]}"#,
    );
    write(
        "horizon.json",
        r#"{"schema_version":1,"horizon":3,"breakpoints":[0,1],"segments":[[0,1]],"jumps":[]}"#,
    );
    let cases = [
        (vec!["verify", "missing.json"], "jumps"),
        (vec!["verify", "gap.json"], "breakpoint 1"),
        (vec!["verify", "version.json"], "schema_version"),
        (vec!["verify", "horizon.json"], "horizon"),
        (vec!["verify", "absent.json"], "absent.json"),
        (vec!["generate", "--fixture", "nope", "-o", "x.json"], "nope"),
        (
            vec!["generate", "--fixture", "stair", "--params", "depth=2", "-o", "x.json"],
            "depth",
        ),
        (
            vec![
                "generate", "--random", "--seed", "1", "--params", "bogus=1", "-o", "x.json",
            ],
            "bogus",
        ),
        (vec!["generate", "--random", "-o", "x.json"], "seed"),
    ];
    for (args, needle) in cases {
        let o = fvlocal(&args, dir.path());
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).to_lowercase().contains(needle), "{args:?}: {}", stderr(&o));
    }
    zigzag(&dir);
    let o = fvlocal(&["profile", "z.json", "-t", "5", "--csv", "p.csv"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    let o = fvlocal(
        &["occupation", "z.json", "-t", "3", "--from", "2", "--to", "1"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(2));
}
