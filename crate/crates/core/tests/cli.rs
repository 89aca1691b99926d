//! End-to-end runs of the `bohrcert` binary.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bohrcert")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn single_json_error(o: &Output) -> serde_json::Value {
    let err = String::from_utf8(o.stderr.clone()).unwrap();
    let lines: Vec<&str> = err.lines().collect();
    assert_eq!(lines.len(), 1, "stderr: {err}");
    let v: serde_json::Value = serde_json::from_str(lines[0]).expect("stderr is JSON");
    assert!(v["error"].is_string() && v["message"].is_string());
    v
}

#[test]
fn certify_z12_example() {
    let o = run(&["certify", "--group", "Z12", "--A", "0,3,6,9", "--B", "0,1", "--theorem", "comb"]);
    assert_eq!(o.status.code(), Some(0));
    let cert: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(cert["verdict"], "pass");
    assert_eq!(cert["spectrum"], serde_json::json!(["chi(4)", "chi(8)"]));
    assert!(cert["oracle"]["violations"].as_array().unwrap().is_empty());
}

#[test]
fn certify_full_a() {
    let o = run(&["certify", "--group", "Z12", "--A", "all", "--B", "0,1"]);
    assert_eq!(o.status.code(), Some(0));
    let cert: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(cert["spectrum"], serde_json::json!([]));
    assert_eq!(cert["oracle"]["checked"], 12);
}

#[test]
fn certify_a5_uses_d_min_3() {
    let o = run(&["certify", "--group", "A5", "--random", "--alpha", "0.4", "--beta", "0.3", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let cert: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let (a, b) = (cert["alpha"].as_f64().unwrap(), cert["beta"].as_f64().unwrap());
    let expected = bohrcert::engine::spectral_bound(a, b, 0.0, 3).unwrap();
    assert_eq!(cert["bound"].as_f64().unwrap(), expected);
}

#[test]
fn certify_is_byte_identical_across_runs_and_threads() {
    let dir = std::env::temp_dir().join(format!("bohrcert-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let mut outputs = Vec::new();
    for threads in ["1", "3"] {
        let path = dir.join(format!("cert-{threads}.json"));
        let o = run(&[
            "certify", "--group", "D9", "--theorem", "erg", "--random", "--alpha", "0.3", "--beta", "0.4", "--r",
            "0.1", "--action", "polygon", "--seed", "11", "--threads", threads, "--out", path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        outputs.push(std::fs::read(&path).unwrap());
    }
    std::fs::remove_dir_all(&dir).ok();
    assert_eq!(outputs[0], outputs[1]);
}

#[test]
fn sweep_is_byte_identical() {
    let args = ["sweep", "--groups", "D3..D6,Z2xZ4", "--count", "3", "--seed", "4"];
    let (x, y) = (run(&args), run(&args));
    assert_eq!(x.status.code(), Some(0));
    assert_eq!(x.stdout, y.stdout);
    assert!(stdout(&x).starts_with("index,group,theorem,alpha,beta,r,"));
}

#[test]
fn sweep_records_degenerate_rows() {
    let o = run(&["sweep", "--groups", "Z12", "--count", "2", "--alpha", "0", "--theorem", "comb"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 3);
    assert!(out.lines().skip(1).all(|l| l.contains(",error,")));
}

#[test]
fn exhaustive_sweep_row_count() {
    let o = run(&["sweep", "--exhaustive", "Z4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1 + 15 * 15);
}

#[test]
fn usage_errors_exit_2_with_one_json_line() {
    for args in [
        vec!["bogus"],
        vec!["certify", "--group", "Q8", "--A", "0", "--B", "0"],
        vec!["certify", "--group", "Z12", "--A", "0,99", "--B", "0"],
        vec!["certify", "--group", "Z12"],
        vec!["zdemo", "--n-max", "2000000"],
        vec!["bohr", "--group", "Z12", "--freqs", "chi(4)", "--eps", "-1"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        single_json_error(&o);
    }
}

#[test]
fn bohr_and_spectrum_commands() {
    let o = run(&["bohr", "--group", "Z12", "--freqs", "chi(4),chi(8)", "--eps", "0.5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("element,seminorm"));
    let elements: Vec<&str> = out.lines().skip(1).map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(elements, ["0", "3", "6", "9"]);

    let o = run(&["spectrum", "--group", "Z12", "--A", "0,3,6,9", "--delta", "0.5"]);
    assert_eq!(o.status.code(), Some(0));
    let large: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .filter(|l| l.ends_with(",true"))
        .map(|l| l.split(',').next().unwrap().to_string())
        .collect();
    assert_eq!(large, ["chi(4)", "chi(8)"]);
}

#[test]
fn zdemo_is_labeled_and_theta_zero_is_one() {
    let o = run(&["zdemo", "--theta", "0,sqrt2-1", "--n-max", "10000"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert!(lines.next().unwrap().contains("demonstration — no theorem verified"));
    assert_eq!(lines.next(), Some("n,term,density,weyl:0,weyl:sqrt2-1"));
    let rows: Vec<Vec<f64>> =
        lines.map(|l| l.split(',').map(|x| x.parse().unwrap()).collect()).collect();
    assert!(rows.iter().all(|r| r[3] == 1.0));
    assert!(rows.last().unwrap()[4] <= 0.05);
}

#[test]
fn zdemo_even_numbers_along_intervals() {
    let o = run(&["zdemo", "--seq", "intervals", "--set", "even", "--n-max", "1000", "--theta", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let last: Vec<f64> = out.lines().last().unwrap().split(',').map(|x| x.parse().unwrap()).collect();
    assert!((last[2] - 0.5).abs() <= 1.0 / 1000.0);
}

#[test]
fn selftest_mutation_exits_1() {
    let o = run(&["selftest", "--mutate"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("homomorphism D6,false")));
}
