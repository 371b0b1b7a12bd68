use std::collections::BTreeSet;
use std::process::Command;

use hlq_cli::{aggregate, catalog, run, suite, Profile, RunArgs, RunConfig};
use hlq_core::identities::Status;

fn hlq(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_hlq")).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    hlq(args).status.code().expect("exit code")
}

#[test]
fn catalog_ids_are_unique_and_cover_the_required_set() {
    let ids: Vec<&str> = catalog().iter().map(|e| e.id).collect();
    let unique: BTreeSet<&str> = ids.iter().copied().collect();
    assert_eq!(unique.len(), ids.len());
    assert!(ids.len() >= 20);
    for id in ["pid.main", "rr.a2", "family.3n+1", "family.3n-1", "family.3n", "bl.bailey", "s6.fulman"] {
        assert!(unique.contains(id), "{id}");
    }
}

#[test]
fn every_default_parses_and_resolves() {
    for e in catalog() {
        for d in [e.quick, e.full] {
            let args = RunArgs::parse_defaults(d).unwrap_or_else(|err| panic!("{}: {err}", e.id));
            args.resolve().unwrap_or_else(|err| panic!("{}: {err}", e.id));
        }
    }
}

#[test]
fn overrides_replace_defaults() {
    let overrides = RunArgs::parse_defaults("-N 12").unwrap();
    let r = run(&RunConfig { identity_id: "rr.a2".into(), overrides, profile: Profile::Quick }).unwrap();
    assert_eq!(r.params["N"], 12);
    assert!(r.passed());
}

#[test]
fn aggregate_fails_only_on_a_failure() {
    use Status::*;
    assert_eq!(aggregate([Pass, Pass]), Pass);
    assert_eq!(aggregate([Pass, Inconclusive]), Inconclusive);
    assert_eq!(aggregate([Inconclusive, Fail, Pass]), Fail);
    assert_eq!(aggregate([]), Pass);
}

#[test]
fn quick_suite_runs_each_id_once() {
    let s = suite(Profile::Quick, Some(3));
    let ran: Vec<&str> = s.members.iter().map(|m| m.identity_id.as_str()).collect();
    let listed: Vec<&str> = catalog().iter().map(|e| e.id).collect();
    assert_eq!(ran, listed);
    assert_ne!(s.status, Status::Fail);
    assert_eq!(s.exit_code(), 0);
}

#[test]
fn unknown_identity_is_a_usage_error() {
    assert_eq!(code(&["run", "nosuch"]), 2);
}

#[test]
fn json_report_has_the_expected_fields() {
    let out = hlq(&["run", "rr.a2", "-N", "60", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["identity_id"], "rr.a2");
    for key in ["params", "checked_bounds", "first_mismatch", "runtime_ms", "seed"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn main_identity_runs_from_flags() {
    assert_eq!(code(&["run", "pid.main", "--vars", "2,2", "-D", "6"]), 0);
}

#[test]
fn malformed_input_is_a_usage_error() {
    assert_eq!(code(&["run", "hl.strip", "--partition", "2,3", "--partition", "1"]), 2);
    assert_eq!(code(&["run", "proof.lemma41", "--mask", "1x0"]), 2);
    assert_eq!(code(&["run", "rr.a2", "-N", "many"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
}

#[test]
fn inconclusive_run_exits_one() {
    let out = hlq(&["run", "s6.npsom2", "--variant", "full"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("inconclusive"));
}

#[test]
fn bad_thread_count_is_a_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_hlq")).args(["list"]).env("HLQ_THREADS", "lots").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let ok = Command::new(env!("CARGO_BIN_EXE_hlq")).args(["run", "rr.a2"]).env("HLQ_THREADS", "1").output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn list_prints_every_id() {
    let out = hlq(&["list", "--format", "json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rows.len(), catalog().len());
}
