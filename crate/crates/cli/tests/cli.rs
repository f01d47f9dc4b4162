use std::path::Path;
use std::process::Command;

use pinquad_cli::{run, RunOutput, EXIT_MATH, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn pinquad(args: &[&str]) -> RunOutput {
    run(std::iter::once("pinquad").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let out = pinquad(args);
    assert_eq!(out.code, EXIT_OK, "{args:?}\nstdout:\n{}\nstderr:\n{}", out.stdout, out.stderr);
    out.stdout
}

fn records(args: &[&str]) -> Vec<Value> {
    let mut full = vec!["--format", "jsonl"];
    full.extend_from_slice(args);
    ok(&full)
        .lines()
        .map(|l| serde_json::from_str(l).expect("one JSON object per line"))
        .collect()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

#[test]
fn info_reports_f_vector_and_orientation() {
    let r = &records(&["info", "--fixture", "rp2"])[0];
    assert_eq!(r["f_vector"], serde_json::json!([6, 15, 10]));
    assert_eq!(r["manifold"], "closed");
    assert_eq!(r["orientable"], false);

    let text = ok(&["info", "--fixture", "torus"]);
    assert!(text.contains("f-vector (7,21,14)"), "{text}");
    assert!(text.contains("closed, orientable"), "{text}");
}

#[test]
fn malformed_simplex_line_is_named() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "bad.cx", "# a broken file\ndim 2\nsimplex 0 1 x\n");
    let out = pinquad(&["info", "--complex", &path]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("line 3"), "{}", out.stderr);
}

#[test]
fn source_flags_are_exclusive() {
    let out = pinquad(&["info", "--fixture", "rp2", "--complex", "x.cx"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert_eq!(pinquad(&["info"]).code, EXIT_USAGE);
    assert_eq!(pinquad(&["info", "--fixture", "no-such"]).code, EXIT_USAGE);
}

#[test]
fn help_and_version_exit_cleanly() {
    let out = pinquad(&["--help"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("ggroup"));
    assert!(!out.stdout.contains("mutated"));
    assert_eq!(pinquad(&["--version"]).code, EXIT_OK);
}

fn h_dim(args: &[&str], k: usize) -> u64 {
    let mut full = vec!["cohomology", "--degree"];
    let k = k.to_string();
    full.push(&k);
    full.extend_from_slice(args);
    records(&full)[0]["dim"].as_u64().unwrap()
}

#[test]
fn cohomology_dimensions() {
    assert_eq!(h_dim(&["--fixture", "rp2"], 1), 1);
    assert_eq!(h_dim(&["--fixture", "annulus"], 1), 1);
    assert_eq!(h_dim(&["--fixture", "sphere3"], 2), 0);
    assert_eq!(h_dim(&["--fixture", "sphere3"], 3), 1);
}

#[test]
fn complex_and_pair_files() {
    let dir = tempfile::tempdir().unwrap();
    // a coned triangle: absolute H^0 = 1, relative to its boundary H^2 = 1
    let tri = write(
        dir.path(),
        "disk.cx",
        "dim 2\nsimplex 0 1 3\nsimplex 1 2 3\nsimplex 0 2 3\nboundary auto\n",
    );
    assert_eq!(h_dim(&["--complex", &tri], 0), 1);
    assert_eq!(h_dim(&["--complex", &tri], 2), 0);
    assert_eq!(h_dim(&["--pair", &tri], 0), 0);
    assert_eq!(h_dim(&["--pair", &tri], 2), 1);
    let r = &records(&["ggroup", "--pair", &tri])[0];
    assert_eq!(r["profile"], "ℤ/2");
}

#[test]
fn basis_files_feed_evaluation() {
    let dir = tempfile::tempdir().unwrap();
    let basis = dir.path().join("basis");
    let b = basis.display().to_string();
    let r = &records(&["cohomology", "--fixture", "rp2", "--degree", "1", "--write-basis", &b])[0];
    assert_eq!(r["basis_files"], serde_json::json!(["h1_0.cochain"]));
    let x = basis.join("h1_0.cochain").display().to_string();
    for (values, expected) in [("1", 1), ("3", 3)] {
        let r = &records(&["quad", "--fixture", "rp2", "eval", "--values", values, "--cochain", &x])[0];
        assert_eq!(r["value"], expected);
        assert!(r["cochain_sha256"].as_str().unwrap().len() == 64);
    }
    // x is the nonzero class, so acting by it negates on rp2
    let r = &records(&["quad", "--fixture", "rp2", "act", "--index", "0", "--cochain", &x])[0];
    assert_eq!(r["values"], serde_json::json!([3]));
}

#[test]
fn quad_subcommands() {
    let rs = records(&["quad", "--fixture", "rp2", "enumerate"]);
    let values: Vec<&Value> = rs.iter().filter(|r| r["action"] == "enumerate").map(|r| &r["values"]).collect();
    assert_eq!(values, [&serde_json::json!([1]), &serde_json::json!([3])]);

    let rs = records(&["quad", "--fixture", "klein", "brown"]);
    assert_eq!(rs.last().unwrap()["betas"], serde_json::json!([0, 0, 2, 6]));

    let out = ok(&["quad", "--fixture", "torus", "verify", "--trials", "500", "--seed", "7"]);
    assert!(out.contains("4 of 4 functions pass"), "{out}");

    let r = &records(&["quad", "--fixture", "rp2", "negate", "--values", "1"])[0];
    assert_eq!(r["values"], serde_json::json!([3]));

    let r = &records(&["quad", "--fixture", "annulus", "boundary", "--index", "0"])[0];
    assert_eq!(r["n"], 1);

    let spin = records(&["quad", "--fixture", "torus", "--mode", "spin", "enumerate"]);
    assert_eq!(spin[0]["count"], 4);
    assert_eq!(pinquad(&["quad", "--fixture", "rp2", "--mode", "spin", "enumerate"]).code, EXIT_USAGE);
}

#[test]
fn wu_obstruction_is_a_math_failure() {
    let out = pinquad(&["quad", "--fixture", "cp2", "enumerate"]);
    assert_eq!(out.code, EXIT_MATH);
    assert!(out.stderr.contains("v2"), "{}", out.stderr);
}

#[test]
fn ggroup_engines_agree() {
    for (fixture, profile) in [("rp2", "ℤ/4"), ("annulus", "ℤ/2 ⊕ ℤ/2"), ("mobius", "ℤ/4")] {
        for engine in ["formula", "bruteforce"] {
            let r = &records(&["ggroup", "--fixture", fixture, "--engine", engine])[0];
            assert_eq!(r["profile"], profile, "{fixture} {engine}");
        }
    }
    let out = pinquad(&["ggroup", "--fixture", "rp2", "--engine", "bruteforce", "--budget", "1000"]);
    assert_eq!(out.code, EXIT_USAGE);
    let r = &records(&["ggroup", "--fixture", "rp2", "--mode", "spin"])[0];
    assert_eq!((r["profile"].as_str(), r["resolved"].as_bool()), (Some("ℤ/2"), Some(true)));
}

#[test]
fn identity_suites() {
    let rs = records(&["identities", "--trials", "100", "--seed", "3"]);
    assert_eq!(rs.last().unwrap()["failures"], 0);
    assert_eq!(rs.len(), 10);

    let out = pinquad(&["identities", "--trials", "100", "--mutated-sign", "--suite", "coboundary"]);
    assert_eq!(out.code, EXIT_MATH);
    assert!(out.stdout.contains("FAIL"));

    let rs = records(&["identities", "--trials", "0"]);
    assert_eq!(rs.len(), 1);
    assert_eq!(rs[0]["suites"], 0);
    assert_eq!(pinquad(&["identities", "--suite", "nonsense"]).code, EXIT_USAGE);
}

#[test]
fn jsonl_is_deterministic_and_hashed() {
    for args in [
        &["--format", "jsonl", "identities", "--trials", "40", "--seed", "11"][..],
        &["--format", "jsonl", "quad", "--fixture", "torus", "verify", "--trials", "30", "--seed", "5"],
        &["--format", "jsonl", "ggroup", "--fixture", "mobius"],
    ] {
        let (a, b) = (ok(args), ok(args));
        assert_eq!(a, b);
        for line in a.lines() {
            let r: Value = serde_json::from_str(line).unwrap();
            assert_eq!(r["sha256"].as_str().map(str::len), Some(64), "{line}");
        }
    }
    // fixtures and files with the same content hash alike
    let dir = tempfile::tempdir().unwrap();
    let text = pinquad::scx::write_complex(
        pinquad::scx::catalog("rp2").unwrap().complex(),
        Some(&pinquad::scx::catalog("rp2").unwrap()),
    );
    let path = write(dir.path(), "rp2.cx", &text);
    let a = &records(&["info", "--fixture", "rp2"])[0];
    let b = &records(&["info", "--complex", &path])[0];
    assert_eq!(a["sha256"], b["sha256"]);
    assert_eq!(a["f_vector"], b["f_vector"]);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_pinquad");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["info", "--fixture", "rp2"]), Some(0));
    assert_eq!(status(&["info", "--bogus"]), Some(1));
    assert_eq!(status(&["identities", "--trials", "50", "--mutated-sign", "--suite", "coboundary"]), Some(2));
}
