use std::path::Path;
use std::process::{Command, Output};

use simplicial_expansion::harness::{export_json, run_experiment, ExperimentConfig, Measurement, WORKERS_ENV};
use simplicial_expansion::Complex;

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_simplicial-expansion"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn exit_codes() {
    assert_eq!(code(&cli(&["--help"])), 0);
    assert_eq!(code(&cli(&["frobnicate"])), 1);
    assert_eq!(code(&cli(&["generate", "--n", "6", "--p", "1.5"])), 1);
    assert_eq!(code(&cli(&["generate", "--n", "6"])), 1);
    assert_eq!(code(&cli(&["experiment", "--config", "/nonexistent/config.json"])), 1);
    assert_eq!(code(&cli(&["predict", "--n", "100", "--eps", "1"])), 0);
}

#[test]
fn generated_complex_feeds_other_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("y.json");
    let p = path.to_str().unwrap();
    let out = cli(&[
        "generate", "--n", "7", "--d", "2", "--p", "0.6", "--seed", "3", "--out", p,
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(Complex::read(&path).unwrap(), Complex::generate(7, 2, 0.6, 3).unwrap());

    let out = cli(&["spectrum", "--input", p]);
    assert_eq!(code(&out), 0);
    let spectrum: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let out = cli(&["cheeger", "--input", p]);
    assert_eq!(code(&out), 0);
    let cheeger: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(cheeger["exact"], true);
    assert!(spectrum["lambda"].as_f64().unwrap() <= cheeger["h"].as_f64().unwrap() + 1e-8);

    for args in [
        &["conductance", "--input", p][..],
        &["walk", "--input", p, "--steps", "1000"][..],
    ] {
        assert_eq!(code(&cli(args)), 0, "{args:?}");
    }
}

#[test]
fn experiment_json_is_identical_across_worker_counts() {
    let dir = tempfile::tempdir().unwrap();
    let run = |workers: &str, name: &str| {
        let path = dir.path().join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_simplicial-expansion"))
            .env(WORKERS_ENV, workers)
            .args([
                "experiment",
                "--n",
                "8,10",
                "--d",
                "2",
                "--eps",
                "1",
                "--samples",
                "6",
                "--seed",
                "9",
            ])
            .args(["--measure", "delta,lambda,h,phi", "--format", "json", "--out"])
            .arg(&path)
            .status()
            .unwrap();
        assert!(status.success());
        std::fs::read(path).unwrap()
    };
    assert_eq!(run("1", "a.json"), run("4", "b.json"));
}

#[test]
fn repeated_runs_export_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let config = ExperimentConfig::with_eps(vec![9, 11], 2, 1.0, 8, 21).measuring(&Measurement::ALL);
    let write = |name: &str| {
        let path = dir.path().join(name);
        export_json(&run_experiment(&config).unwrap(), &path).unwrap();
        std::fs::read(Path::new(&path)).unwrap()
    };
    assert_eq!(write("first.json"), write("second.json"));
}
