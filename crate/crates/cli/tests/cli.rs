//! End-to-end checks of the binary: format stability, determinism, exit
//! codes.

use std::process::{Command, Output};

fn turan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_turan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn sample_gnp_is_deterministic_per_seed() {
    let a = turan(&["--seed", "7", "sample", "gnp", "--n", "12", "--p", "0.4"]);
    let b = turan(&["--seed", "7", "sample", "gnp", "--n", "12", "--p", "0.4"]);
    let c = turan(&["--seed", "8", "sample", "gnp", "--n", "12", "--p", "0.4"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    assert_ne!(stdout(&a), stdout(&c));
    let header = stdout(&a).lines().next().unwrap().to_string();
    assert!(header.starts_with("12 "));
}

#[test]
fn sample_rejects_bad_p() {
    let out = turan(&["sample", "gnp", "--n", "5", "--p", "1.5"]);
    assert!(!out.status.success());
}

#[test]
fn solve_pipeline_roundtrip() {
    let dir = std::env::temp_dir().join(format!("turan-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k5.txt");
    // K_5 in the canonical format
    let mut text = String::from("5 10\n");
    for u in 0..5 {
        for v in u + 1..5 {
            text.push_str(&format!("{u} {v}\n"));
        }
    }
    std::fs::write(&path, text).unwrap();

    let out = turan(&["solve", "kr-free", "--input", path.to_str().unwrap(), "--r", "3"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["value"], 6);
    assert_eq!(v["optimal"], true);
    assert!(v["witness_edges"].as_array().unwrap().len() == 6);

    let out = turan(&[
        "solve", "kr-free", "--input", path.to_str().unwrap(), "--r", "3", "--brute-force",
    ]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["value"], 6);

    let out = turan(&["solve", "partite", "--input", path.to_str().unwrap(), "--k", "2"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["value"], 6);
    assert!(v["witness_parts"].as_array().unwrap().len() == 2);

    let out = turan(&["solve", "gap", "--input", path.to_str().unwrap(), "--r", "3"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["gap"], 0);

    let out = turan(&["solve", "optima", "--input", path.to_str().unwrap(), "--r", "3"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["all_optima_partite"], true);

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn sweep_csv_schema_and_thread_invariance() {
    let args_base = [
        "sweep", "--n", "8", "--r", "3", "--p-grid", "0,0.5,1", "--trials", "10",
    ];
    let one: Vec<&str> = ["--seed", "3", "--threads", "1"]
        .iter()
        .chain(args_base.iter())
        .copied()
        .collect();
    let eight: Vec<&str> = ["--seed", "3", "--threads", "8"]
        .iter()
        .chain(args_base.iter())
        .copied()
        .collect();
    let a = turan(&one);
    let b = turan(&eight);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let text = stdout(&a);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,r,p,trials,equality_count,unresolved_count,equality_rate,stderr,seed"
    );
    assert_eq!(lines.clone().count(), 3);
    assert!(lines.all(|l| l.split(',').count() == 9));
}

#[test]
fn sweep_accepts_config_file() {
    let dir = std::env::temp_dir().join(format!("turan-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("config.json");
    std::fs::write(
        &cfg,
        r#"{"n": 8, "r": 3, "p_grid": [0.0, 1.0], "trials": 5, "master_seed": 9}"#,
    )
    .unwrap();
    let out = turan(&["sweep", "--config", cfg.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 2);
    for row in rows {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields[6], "1"); // equality_rate exactly 1 at both endpoints
        assert_eq!(fields[8], "9"); // master seed recorded
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn stoptime_sample_has_comment_header() {
    let out = turan(&["--seed", "5", "sample", "stoptime", "--n", "8", "--r", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("# stop_index "));
}

#[test]
fn bounds_print_one_number() {
    let out = turan(&[
        "bounds", "janson", "--mu", "0.5", "--delta-bar", "0.875", "--t", "0.25",
    ]);
    assert!(out.status.success());
    let val: f64 = stdout(&out).trim().parse().unwrap();
    assert!((val - 0.96491).abs() < 1e-4);

    let out = turan(&[
        "bounds", "riordan-warnke", "--mu", "10", "--theta-bar", "5", "--gamma", "1", "--t", "3",
    ]);
    let val: f64 = stdout(&out).trim().parse().unwrap();
    assert!((val - (-0.4f64).exp()).abs() < 1e-10);

    let out = turan(&["bounds", "chernoff-upper", "--mu", "100", "--lambda", "30"]);
    let val: f64 = stdout(&out).trim().parse().unwrap();
    assert!((val - (-900.0f64 / 220.0).exp()).abs() < 1e-10);
}

#[test]
fn bounds_family_stats_from_json_file() {
    let dir = std::env::temp_dir().join(format!("turan-fam-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("family.json");
    std::fs::write(
        &path,
        r#"{"ground_size": 6, "events": [[0,1,2],[0,3,4],[1,3,5],[2,4,5]]}"#,
    )
    .unwrap();
    let out = turan(&[
        "bounds", "family-stats", "--family", path.to_str().unwrap(), "--p", "0.5",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!((v["mu"].as_f64().unwrap() - 0.5).abs() < 1e-12);
    assert!((v["delta_bar"].as_f64().unwrap() - 0.875).abs() < 1e-12);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_exit_codes() {
    let out = turan(&["verify", "constants"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("[PASS] constants"));

    let out = turan(&["verify", "no-such-suite"]);
    assert!(!out.status.success());
}

#[test]
fn params_echo() {
    let out = turan(&["params", "--n", "100", "--r", "4", "--p", "0.3"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["b_r"], "2/9");
    assert_eq!(v["n"], 100);
}
