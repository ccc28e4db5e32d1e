use std::process::Command;

use serde_json::Value;
use smolab::report::Report;
use smolab_cli::{run, Outcome};

fn go(args: &[&str]) -> Outcome {
    run(std::iter::once("smolab").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let out = go(args);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn group_file(name: &str) -> String {
    format!("{}/../core/data/groups/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn poleline_of_a_simple_factor() {
    let r = json(&["euler", "poleline", "--q", "4", "--alphas", "2,0.5"]);
    assert_eq!(r["values"]["poleline"], 0.5);
    assert_eq!(r["experiment"], "euler.poleline");
    assert_eq!(r["paper_anchor"].as_array().unwrap().len(), 1);
}

#[test]
fn quaternion_group_has_no_degree_two_pair() {
    let r = json(&["charlab", "extremal", &group_file("q8.group"), "--degree", "2"]);
    assert_eq!(r["values"]["witness"], Value::Null);
    assert_eq!(r["values"]["irreducibles_of_degree"], 1);
    assert_eq!(r["verdicts"]["witness_found"], false);
    let r = json(&["charlab", "extremal", "direct_product(quaternion8, cyclic(2))", "--degree", "2"]);
    assert_eq!(r["values"]["fraction"], "7/8");
}

#[test]
fn usage_errors_exit_two() {
    for args in [&["bogus"][..], &["euler", "poleline", "--q", "4", "--alphas", "2", "--nope"], &[]] {
        let out = go(args);
        assert_eq!(out.code, 2, "{args:?}");
        assert!(out.stderr.starts_with("error[usage]: "), "{}", out.stderr);
    }
    let out = go(&["euler", "eval", "--q", "4", "--alphas", "x", "--s", "2"]);
    assert_eq!(out.code, 2);
}

#[test]
fn domain_errors_exit_one() {
    let out = go(&["smo", "inert", "--field", "N=5;H=", "--no-probe"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.starts_with("error[smo]: "), "{}", out.stderr);
    let out = go(&["euler", "poleline", "--q", "4", "--alphas", "2,0.5", "--out", "/nonexistent/dir/r.json"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.starts_with("error[io]: "), "{}", out.stderr);
}

#[test]
fn csv_density_has_one_row_per_grid_point() {
    let out = go(&["--format", "csv", "density", "natural", "--selector", "mod:4:1", "--x", "1000,10000,100000"]);
    assert_eq!(out.code, 0);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[0], "x,ratio");
    assert_eq!(lines.len(), 4);
    assert!(lines[3].starts_with("100000,"));
}

#[test]
fn report_written_to_file_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zeta.json");
    let p = path.to_str().unwrap();
    let out = go(&["--out", p, "density", "primezeta", "--x", "100000"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let r = Report::from_json(&text).unwrap();
    assert_eq!(r.to_json(), text);
    assert_eq!(r.inputs_digest.len(), 64);
}

#[test]
fn seed_changes_synthetic_data_but_workers_do_not() {
    let base = ["smo", "compare", "--synthetic", "--x", "2000"];
    let a = go(&[&["--seed", "1", "--workers", "1"][..], &base].concat());
    let b = go(&[&["--seed", "1", "--workers", "3"][..], &base].concat());
    let c = go(&[&["--seed", "2", "--workers", "1"][..], &base].concat());
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
    assert_eq!(go(&[&["--workers", "0"][..], &base].concat()).code, 2);
}

#[test]
fn gen_tau_writes_the_raw_table() {
    let out = go(&["data", "gen-tau", "--limit", "12"]);
    assert_eq!(out.stdout, "p,a_p\n2,-24\n3,252\n5,4830\n7,-16744\n11,534612\n");
}

#[test]
fn character_table_csv_has_class_size_header() {
    let out = go(&["--format", "csv", "charlab", "table", "symmetric(3)"]);
    assert_eq!(out.code, 0);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 4);
    let mut header: Vec<u32> = lines[0].split(',').map(|s| s.parse().unwrap()).collect();
    header.sort();
    assert_eq!(header, vec![1, 2, 3]);
}

#[test]
fn binary_respects_worker_env_var() {
    let bin = env!("CARGO_BIN_EXE_smolab");
    let args = ["smo", "rajan", "--selector", "mod:8:1,3", "--n", "3"];
    let one = Command::new(bin).args(args).env("SMOLAB_WORKERS", "1").output().unwrap();
    let four = Command::new(bin).args(args).env("SMOLAB_WORKERS", "4").output().unwrap();
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    let bad = Command::new(bin).arg("nope").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn every_smo_subcommand_runs_on_bundled_data() {
    for args in [
        &["smo", "compare", "--x", "1000"][..],
        &["smo", "tempered", "--selector", "mod:4:1", "--eps", "1/10,1/8,1/6"],
        &["smo", "zratio", "--synthetic", "--cutoff", "1000"],
        &["smo", "inert", "--field", "N=7;H=6", "--no-probe"],
        &["smo", "tower", "--field", "N=5;H=4", "--chain", "N=5;H=", "--x", "1000"],
        &["euler", "profile", "ksa-bb"],
        &["euler", "rs", "--q", "3", "--alphas", "0.6+0.8i,0.6-0.8i"],
        &["euler", "eval", "--q", "2", "--alphas", "1", "--s", "2"],
    ] {
        let out = go(args);
        assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    }
}
