use std::process::{Command, Output};

fn knots(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knots")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn invariants_trefoil_braid() {
    let o = knots(&["invariants", "--format", "braid", "2: 1 1 1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("v2=1") && out.contains("v3=4") && out.contains("minDegV=1"), "{out}");
}

#[test]
fn positivity_figure_eight_dt() {
    let o = knots(&["positivity", "--format", "dt", "4 6 8 2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("not-positive"), "{}", stdout(&o));
}

#[test]
fn convert_conway_to_pd() {
    let o = knots(&["convert", "--format", "conway", "C: 2 2", "--to", "pd"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).split_whitespace().filter(|t| *t == "X").count(), 4);
}

#[test]
fn verify_fault_injection_fails_with_small_counterexample() {
    let o = knots(&["verify", "--count", "10", "--max-size", "8", "--inject-v3-sign-fault"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("v3-mirror-antisymmetry") && out.contains("FAILED"), "{out}");
    assert!(out.contains("first:"), "{out}");
}

#[test]
fn verify_empty_corpus_is_vacuous_pass() {
    let o = knots(&["verify", "--count", "0"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_json_deterministic() {
    let args = ["--json", "verify", "--count", "25", "--max-size", "10", "--seed", "9"];
    let a = knots(&args);
    let b = knots(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    for line in stdout(&a).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v.get("suite").is_some() && v.get("pass").is_some());
    }
}

#[test]
fn batch_isolates_bad_inputs() {
    let o = knots(&["invariants", "--format", "braid", "2: 1 1 1", "not a braid", "3: 1 2 1 2"]);
    assert_eq!(o.status.code(), Some(2));
    let out = stdout(&o);
    assert!(out.contains("#1") && out.contains("#3"), "{out}");
    assert!(String::from_utf8_lossy(&o.stderr).contains("input 2"), "{o:?}");
}

#[test]
fn unknown_name_is_input_error() {
    let o = knots(&["invariants", "--format", "name", "99_999"]);
    assert_eq!(o.status.code(), Some(2));
}
