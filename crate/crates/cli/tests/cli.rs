use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name);
    root.to_str().unwrap().to_string()
}

fn nambu(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nambu"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write_temp(name: &str, text: &str) -> String {
    let path = std::env::temp_dir().join(format!("nambu-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn default_checks_pass_on_example() {
    let o = nambu(&["check", &fixture("r3_x3.json")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("structure: m = 3, n = 3, lambda = x3*d1^d2^d3\njet degree: 3\n"));
    for name in [
        "fundamental-identity",
        "invariance",
        "anchor",
        "leibniz",
        "characterization",
        "lsv",
        "modular-cocycle",
    ] {
        assert!(out.contains(&format!("{name}: PASS")), "{name} missing from\n{out}");
    }
    assert!(out.ends_with("verdict: PASS\n"));
}

#[test]
fn failing_check_exits_two_with_counterexample() {
    let o = nambu(&["check", &fixture("r6_sum.json"), "--checks", "fundamental-identity"]);
    assert_eq!(o.status.code(), Some(2));
    let out = stdout(&o);
    assert!(out.contains("fundamental-identity: FAIL (1939 items)"), "{out}");
    assert!(
        out.contains("    f1 = x1\n    f2 = x2*x4\n    g1 = x3\n    g2 = x5\n    g3 = x6\n  residual = -1\n"),
        "{out}"
    );
    assert!(out.ends_with("verdict: FAIL\n"));

    let quiet = stdout(&nambu(&[
        "--quiet",
        "check",
        &fixture("r6_sum.json"),
        "--checks",
        "fundamental-identity,anchor",
    ]));
    assert!(quiet.starts_with("fundamental-identity: FAIL"), "{quiet}");
    assert!(!quiet.contains("verdict"));
}

#[test]
fn input_errors_exit_one_with_location() {
    let bad = write_temp(
        "repeated.json",
        r#"{"schema": "nambu-structure/1", "dimension": 3, "order": 3, "lambda": [{"index": [1, 1, 2], "coeff": "1"}]}"#,
    );
    let o = nambu(&["check", &bad]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stderr(&o).contains("lambda[0].index: multi-index [1, 1, 2] is not strictly increasing"),
        "{}",
        stderr(&o)
    );

    let o = nambu(&["check", &fixture("r3_x3.json"), "--jet-degree", "1"]);
    assert_eq!(o.status.code(), Some(1));
    let o = nambu(&["check", &fixture("r3_x3.json"), "--checks", "nope"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("unknown check \"nope\""));
    let o = nambu(&["check", "/nonexistent/structure.json"]);
    assert_eq!(o.status.code(), Some(1));
    let o = nambu(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(1));
    let o = nambu(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn compute_golden_values() {
    let r3 = fixture("r3_x3.json");
    let r4 = fixture("r4_normal.json");
    let cases: &[(&[&str], &str)] = &[
        (&["compute", &r3, "modular"], "d1^d2\n"),
        (&["compute", &r3, "hamiltonian", "x1", "x2"], "x3*d3\n"),
        (&["compute", &r3, "hamiltonian", "x1", "x3"], "-x3*d2\n"),
        (&["compute", &r3, "hamiltonian", "x2", "x3"], "x3*d1\n"),
        (&["compute", &r3, "sharp", "dx1^dx2"], "x3*d3\n"),
        (&["compute", &r4, "bracket", "dx3^dx4", "x1*dx1^dx2"], "0\n"),
        (&["compute", &r4, "bracket", "x1*dx1^dx2", "dx3^dx4"], "dx1^dx4\n"),
        (&["compute", &fixture("r3_volume.json"), "modular"], "0\n"),
    ];
    for (args, want) in cases {
        let o = nambu(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        assert_eq!(&stdout(&o), want, "{args:?}");
    }
    let o = nambu(&["compute", &r3, "hamiltonian", "x1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn witness_reports() {
    let o = nambu(&["witness", &fixture("r3_x3.json"), "--max-degree", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "search degree: 8\nfeasible: no\nobstruction: component d1^d2: x3*∂f/∂x3 = 1\n\
         nontrivial within polynomials; the component equation has no smooth solution\n"
    );
    let out = stdout(&nambu(&["witness", &fixture("r3_volume.json")]));
    assert!(out.contains("feasible: yes\nwitness: 0\n"), "{out}");
    let out = stdout(&nambu(&["witness", &fixture("r3_planted.json")]));
    assert!(out.contains("feasible: yes\nwitness: x1*x2\n"), "{out}");

    let v: Value = serde_json::from_str(&stdout(&nambu(&["--json", "witness", &fixture("r3_x3.json")]))).unwrap();
    assert_eq!(v["feasible"], false);
    assert_eq!(v["obstruction"]["component"], "d1^d2");
    assert_eq!(v["obstruction"]["variable"], 3);
    assert_eq!(v["obstruction"]["equation"], "x3*∂f/∂x3 = 1");
    assert_eq!(v["nontrivial_within_polynomials"], true);
}

#[test]
fn output_is_deterministic() {
    let r6 = fixture("r6_sum.json");
    let runs: Vec<Vec<&str>> = vec![
        vec!["check", &r6, "--checks", "fundamental-identity,invariance,anchor"],
        vec![
            "--json",
            "check",
            &r6,
            "--checks",
            "fundamental-identity,invariance,anchor",
        ],
        vec!["--json", "witness", &r6],
    ];
    for args in &runs {
        let a = nambu(args);
        let b = nambu(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        let mut seq = vec!["--sequential"];
        seq.extend_from_slice(args);
        assert_eq!(nambu(&seq).stdout, a.stdout, "{args:?}");
    }
}

#[test]
fn json_and_text_verdicts_agree() {
    let file = fixture("r6_sum.json");
    let checks = "fundamental-identity,invariance,anchor,lsv,coboundary-square";
    let text = stdout(&nambu(&["check", &file, "--checks", checks]));
    let json = nambu(&["--json", "check", &file, "--checks", checks]);
    assert_eq!(json.status.code(), Some(2));
    let v: Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["schema"], "nambu-report/1");
    assert_eq!(v["verdict"], "fail");
    let reports = v["checks"].as_array().unwrap();
    assert_eq!(reports.len(), 5);
    for r in reports {
        let verdict = r["verdict"].as_str().unwrap().to_uppercase();
        let line = format!(
            "{}: {} ({} items)",
            r["check"].as_str().unwrap(),
            verdict,
            r["items_checked"]
        );
        assert!(text.contains(&line), "{line} not in\n{text}");
        if verdict == "FAIL" {
            let cx = &r["counterexample"];
            assert!(cx["inputs"].as_array().is_some_and(|i| !i.is_empty()));
            let residual = format!("  residual = {}\n", cx["residual"].as_str().unwrap());
            assert!(text.contains(&residual));
        } else {
            assert!(r["counterexample"].is_null());
        }
    }
}

#[test]
fn file_settings_apply_unless_overridden() {
    let file = write_temp(
        "settings.json",
        r#"{"schema": "nambu-structure/1", "dimension": 3, "order": 3,
            "lambda": [{"index": [1, 2, 3], "coeff": "x3"}],
            "checks": ["lsv"], "jet_degree": 2}"#,
    );
    let out = stdout(&nambu(&["check", &file]));
    assert!(out.contains("jet degree: 2\nlsv: PASS"), "{out}");
    assert_eq!(out.matches(" items)").count(), 1);
    let out = stdout(&nambu(&["check", &file, "--jet-degree", "4", "--checks", "invariance"]));
    assert!(out.contains("jet degree: 4\ninvariance: PASS"), "{out}");
}
