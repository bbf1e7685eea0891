use std::process::{Command, Output};

use kkschur::SymFunc;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kkschur")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn closed_katalan_example() {
    let out = run(&["compute", "--family", "closed-katalan", "--k", "3", "--lambda", "2,1,1"]);
    assert!(out.status.success());
    let got: SymFunc = stdout(&out).trim().parse().unwrap();
    let want: SymFunc = "h2*h1^2 + h2*h1 - h2^2".parse().unwrap();
    assert_eq!(got, want);
}

#[test]
fn pieri_example() {
    let out = run(&["pieri", "--k", "2", "--lambda", "1,1,1", "--r", "2", "--basis", "gk"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "+1·(2,1,1,1) \u{2212}1·(2,1,1)");
}

#[test]
fn compute_json_parses_back() {
    for family in ["gk", "closed-katalan", "gtilde", "gcirc"] {
        let args = ["compute", "--family", family, "--k", "3", "--lambda", "3,2,1,1", "--format", "json"];
        let text = run(&args[..7]);
        let json = run(&args);
        assert!(json.status.success());
        let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
        let from_json: SymFunc = serde_json::from_value(v["value"].clone()).unwrap();
        let from_text: SymFunc = stdout(&text).trim().parse().unwrap();
        assert_eq!(from_json, from_text, "{family}");
        assert_eq!(from_json, kkschur::kschur::FamilyCache::new(3).get(family.parse().unwrap(), &"3,2,1,1".parse().unwrap()).unwrap());
    }
}

#[test]
fn expand_in_reports_coefficients() {
    let out = run(&["compute", "--family", "gtilde", "--k", "2", "--lambda", "2,1", "--expand-in", "gk"]);
    assert!(out.status.success());
    let s = stdout(&out);
    let line = s.lines().nth(1).unwrap();
    assert!(line.starts_with("gk:"), "{s}");
    assert!(line.contains("+1·(2,1)") && line.contains("+1·()"), "{s}");
}

#[test]
fn bruhat_word_example() {
    let out = run(&["bruhat", "--k", "4", "--lambda", "4,3,2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("s4 s3 s1 s0 s4 s3 s2 s1 s0"));
}

#[test]
fn sh_example() {
    let out = run(&["sh", "--k", "6", "--lambda", "3,2", "--i", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("sh(w) = (3,2,1,1)"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["compute", "--k", "2", "--lambda", "3"][..],
        &["compute", "--k", "0"],
        &["verify", "--suite", "nope", "--k", "1"],
        &["pieri", "--k", "2", "--lambda", "1", "--r", "5"],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn verify_passes_and_is_deterministic() {
    let args = ["verify", "--suite", "theorem-main", "--k", "3", "--max-size", "7"];
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert!(stdout(&a).trim_end().ends_with(" 0 failed"));
    assert_eq!(stdout(&a), stdout(&run(&args)));
    let par = run(&[&args[..], &["--parallel"]].concat());
    assert_eq!(stdout(&a), stdout(&par));
}

#[test]
fn verify_json_is_deterministic_apart_from_timings() {
    let args = ["verify", "--suite", "rewrite-lemmas", "--k", "1", "--seed", "5", "--format", "json"];
    let strip = |o: Output| {
        let mut v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        for r in v["records"].as_array_mut().unwrap() {
            r["elapsed_ms"] = 0.into();
        }
        v
    };
    let a = strip(run(&args));
    assert_eq!(a["failed"], 0);
    assert_eq!(a, strip(run(&args)));
}

#[test]
fn other_commands_are_deterministic() {
    for args in [
        &["diagram", "--k", "3", "--lambda", "2,1,1", "--ell", "4"][..],
        &["pieri", "--k", "3", "--lambda", "2,1", "--r", "2", "--basis", "gtilde", "--direction", "vertical"],
        &["compute", "--k", "4", "--lambda", "4,2,1", "--format", "json"],
    ] {
        let a = run(args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, run(args).stdout, "{args:?}");
    }
}
