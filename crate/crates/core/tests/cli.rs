use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diffeomodel")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    let v = serde_json::from_slice(&out.stdout).expect("report is JSON");
    (out.status.code().unwrap(), v)
}

fn check<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["checks"].as_array().unwrap().iter().find(|c| c["name"] == name).unwrap_or_else(|| panic!("no check {name}"))
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let cases: [&[&str]; 4] = [
        &["verify-axiom2", "--p", "2", "--q", "3", "--trials", "3", "--seed", "7", "--format", "json"],
        &["verify-axiom3", "--p", "2", "--trials", "500", "--seed", "3", "--format", "json"],
        &["rlp", "--map", "delta1_to_delta0", "--gens", "j", "--max-dim", "2", "--format", "json"],
        &["factorize", "--map", "horn2_1_incl", "--max-stages", "1", "--format", "json"],
    ];
    for args in cases {
        let (a, b) = (run(args), run(args));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(!a.stdout.is_empty());
    }
}

#[test]
fn timing_is_opt_in() {
    let (_, plain) = json(&["verify-axiom4", "--p", "1", "--k", "0", "--grid", "10"]);
    assert!(plain.get("timing").is_none());
    let (_, timed) = json(&["verify-axiom4", "--p", "1", "--k", "0", "--grid", "10", "--timing"]);
    assert!(timed["timing"].as_f64().unwrap() >= 0.0);
}

#[test]
fn horn_deformation_passes() {
    let (code, r) = json(&["verify-axiom4", "--p", "2", "--k", "1"]);
    assert_eq!(code, 0);
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn interval_is_not_fibrant() {
    let (code, r) = json(&["rlp", "--map", "delta1_to_delta0", "--gens", "j", "--max-dim", "2"]);
    assert_eq!(code, 1);
    let failures = r["output"]["failures"].as_array().unwrap();
    assert_eq!(failures[0]["generator"], "horn(2,0)");
    assert_eq!(r["parameters"]["gens"], "j");
}

#[test]
fn point_is_fibrant() {
    let (code, _) = json(&["rlp", "--map", "delta0_to_delta0", "--gens", "j", "--max-dim", "3"]);
    assert_eq!(code, 0);
}

#[test]
fn circle_invariants() {
    let (code, r) = json(&["pi", "--complex", "boundary2"]);
    assert_eq!(code, 0);
    assert_eq!(r["output"]["pi0"]["count"], 1);
    assert_eq!(r["output"]["edge_group"]["rank"], 1);
}

#[test]
fn factorization_stages_commute() {
    let (code, r) = json(&["factorize", "--map", "horn2_1_incl", "--max-stages", "1"]);
    assert_eq!(code, 0);
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["status"] != "fail"));
}

#[test]
fn homotopy_is_identity_at_time_zero() {
    let (code, r) =
        json(&["homotopy-eval", "--kind", "horn", "--p", "2", "--k", "0", "--point", "0.2,0.3,0.5", "--s", "0"]);
    assert_eq!(code, 0);
    assert_eq!(r["parameters"]["kind"], "horn");
    assert_eq!(check(&r, "result in the simplex")["status"], "pass");
    assert_eq!(r["output"]["result"], r["output"]["point"]);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["verify-axiom4", "--p", "9", "--k", "0"]).status.code(), Some(2));
}

#[test]
fn json_flag_writes_the_report() {
    let path = std::env::temp_dir().join(format!("diffeomodel-report-{}.json", std::process::id()));
    let out = run(&["verify-axiom1", "--p", "2", "--grid", "5", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(written["command"], "verify-axiom1");
}
