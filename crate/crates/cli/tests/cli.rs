use std::process::{Command, Output};

use recomp::graphkit::graph6;
use recomp::hypomorphy::equal_up_to_complementation;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_recomp"))
        .args(args)
        .env_remove("RECOMP_JOBS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--output", "json"];
    full.extend_from_slice(args);
    let out = run(&full);
    let text = String::from_utf8(out.stdout).unwrap();
    let v: Value = serde_json::from_str(text.trim()).unwrap_or_else(|e| panic!("not JSON ({e}): {text}"));
    (v, out.status.code().unwrap())
}

#[test]
fn paley_five_is_the_pentagon() {
    let out = run(&["construct", "paley", "5"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "Dhc");
}

#[test]
fn matrix_example() {
    let (v, code) = json(&["matrix", "--t", "2", "--k", "4", "--v", "6", "--p", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["expected_rank"], 14);
    assert_eq!(v["result"]["computed_rank"], 14);
    assert_eq!(v["result"]["pass"], true);
    assert_eq!(v["params"]["p"], 2);
    let (v, _) = json(&["matrix", "--t", "2", "--k", "3", "--v", "7"]);
    assert_eq!(v["result"]["p"], "Q");
}

#[test]
fn check_pair_example() {
    let (v, code) = json(&["check-pair", "C?", "C@", "--k", "2", "--mode", "hypo"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["holds"], false);
    assert!(v["result"]["witness"].is_array());
}

#[test]
fn usage_errors_exit_two_with_json() {
    for args in [
        vec!["bogus"],
        vec!["check-pair", "C?", "C@", "--k", "9", "--mode", "hypo"],
        vec!["check-pair", "C?", "C@", "--k", "2", "--mode", "nope"],
        vec!["matrix", "--t", "2", "--k", "4", "--v", "6", "--p", "4"],
        vec!["construct", "paley", "21"],
        vec!["construct", "nothing"],
        vec!["atlas", "--relation", "S", "--v", "9", "--k", "4"],
        vec!["analyze", "not graph6 at all \u{1}"],
    ] {
        let (v, code) = json(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(v["error"]["message"].is_string(), "{args:?}");
    }
    let out = run(&["construct", "paley", "21"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8(out.stderr).unwrap().is_empty());
}

#[test]
fn clean_sweep_exits_zero() {
    let (v, code) = json(&["verify", "down", "--v", "5", "--k", "3"]);
    assert_eq!((code, v["result"]["violation_count"].as_u64()), (0, Some(0)));
    assert_eq!(v["falsified"], false);
}

#[test]
fn construct_pairs_round_trip() {
    for args in [
        vec!["construct", "clique-pair", "6"],
        vec!["construct", "cycle-swap", "7"],
        vec!["construct", "k7", "10"],
        vec!["construct", "remark", "3", "6"],
        vec!["construct", "nonn3", "5", "4"],
    ] {
        let (v, code) = json(&args);
        assert_eq!(code, 0, "{args:?}");
        for key in ["g", "g_prime"] {
            let s = v["result"][key].as_str().unwrap();
            assert_eq!(graph6::encode(&graph6::decode(s).unwrap()), s);
        }
        assert!(!v["result"]["verified"].as_array().unwrap().is_empty());
    }
    let (v, _) = json(&["construct", "lemma-five"]);
    assert_eq!(v["result"].as_array().unwrap().len(), 3);
    let (v, _) = json(&["construct", "lex-paley", "5", "5"]);
    assert_eq!(v["result"]["class_g_certified"], true);
}

#[test]
fn atlas_witness_reverifies_in_fresh_process() {
    let (v, code) = json(&["atlas", "--relation", "S", "--v", "6", "--k", "3"]);
    assert_eq!(code, 0);
    let rec = &v["result"];
    assert_eq!(rec["verdict"], "NonMember");
    assert!(rec.get("wall_time_seconds").is_none());
    let (a, b) = (rec["witness"][0].as_str().unwrap(), rec["witness"][1].as_str().unwrap());
    let (check, _) = json(&["check-pair", a, b, "--k", "3", "--mode", "hypo-utc"]);
    assert_eq!(check["result"]["holds"], true);
    let (g, h) = (graph6::decode(a).unwrap(), graph6::decode(b).unwrap());
    assert!(!equal_up_to_complementation(&g, &h).unwrap());
}

#[test]
fn atlas_resume_and_exports() {
    let dir = std::env::temp_dir().join(format!("recomp-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let log = dir.join("atlas.jsonl");
    let csv = dir.join("table.csv");
    let wit = dir.join("witnesses");
    let args = [
        "atlas",
        "--relation",
        "R",
        "--v",
        "4",
        "--k",
        "3",
        "--resume",
        log.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
        "--witness-dir",
        wit.to_str().unwrap(),
    ];
    let (first, _) = json(&args);
    let (second, _) = json(&args);
    assert_eq!(first, second);
    assert_eq!(std::fs::read_to_string(&log).unwrap().lines().count(), 1);
    let table = std::fs::read_to_string(&csv).unwrap();
    assert!(table.starts_with("v,k,relation,verdict"));
    assert!(table.lines().nth(1).unwrap().starts_with("4,3,R,NonMember,"));
    let w = std::fs::read_to_string(wit.join("R_4_3.g6")).unwrap();
    assert_eq!(w.lines().count(), 2);
    let human = String::from_utf8(run(&args).stdout).unwrap();
    assert!(human.contains("(from log)"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_independent_of_workers() {
    let a = run(&["--output", "json", "--jobs", "1", "verify", "kaplus", "--v", "6", "--k", "3"]);
    let b = run(&["--output", "json", "--jobs", "3", "verify", "kaplus", "--v", "6", "--k", "3"]);
    assert_eq!(a.stdout, b.stdout);
    let c = Command::new(env!("CARGO_BIN_EXE_recomp"))
        .args(["--output", "json", "verify", "kaplus", "--v", "6", "--k", "3"])
        .env("RECOMP_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(a.stdout, c.stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_recomp"))
        .args(["construct", "claw"])
        .env("RECOMP_JOBS", "many")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn analyze_reports_properties() {
    let (v, code) = json(&["analyze", "Dhc"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["self_complementary"], true);
    assert_eq!(v["result"]["regular"], true);
    assert_eq!(v["result"]["invariants"]["e"], 5);
    let (v, _) = json(&["analyze", "CF"]);
    // graph6 of the claw with centre 3
    assert_eq!(v["result"]["claw_free"], false);
}

#[test]
fn search_reports_coverage() {
    let (v, code) = json(&["search-class-g", "--n", "13", "--budget", "1000"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["exhaustive"], true);
    assert!(!v["result"]["members"].as_array().unwrap().is_empty());
    // no circulant of order 9 is self-complementary
    let (v, _) = json(&["search-class-g", "--n", "9"]);
    assert_eq!(v["result"]["members"].as_array().unwrap().len(), 0);
    let (v, _) = json(&["verify", "class-g", "--v", "5"]);
    assert_eq!(v["result"]["holds"], true);
}
