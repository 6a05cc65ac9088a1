//! Black-box tests of the compiled binary: exit codes, output determinism,
//! and basic shape of each format.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_upq-walls"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

const FLAGSHIP: &[&str] = &[
    "analyze", "--type", "3,2,0,2", "--genus", "2", "--canonical", "--window", "0,1",
];

#[test]
fn analyze_json_is_deterministic_and_exact() {
    let mut args = FLAGSHIP.to_vec();
    args.extend(["--format", "json"]);
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "byte-identical across runs");

    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["walls"][0]["alpha"], "1/6");
    assert_eq!(v["walls"][1]["alpha"], "1");
    assert_eq!(v["invariants"]["mu"], "2/5");
    assert_eq!(v["invariants"]["dimension"], 26);
    assert_eq!(v["self_check"], serde_json::Value::Null);
}

#[test]
fn self_check_passes_on_flagship() {
    let mut args = FLAGSHIP.to_vec();
    args.extend(["--format", "json", "--self-check"]);
    let out = run(&args);
    assert!(out.status.success(), "exit 0 when the oracle agrees");
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["self_check"]["passed"], true);
}

#[test]
fn window_required_is_exit_one() {
    let out = run(&[
        "analyze", "--type", "2,2,0,0", "--genus", "2", "--canonical",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("window"), "stderr explains: {err}");
}

#[test]
fn invalid_type_is_exit_one() {
    let out = run(&[
        "analyze", "--type", "0,2,0,2", "--genus", "2", "--canonical",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn svg_has_one_tick_per_wall() {
    let mut args = FLAGSHIP.to_vec();
    args.extend(["--format", "svg"]);
    let out = run(&args);
    assert!(out.status.success());
    let svg = String::from_utf8(out.stdout).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("class=\"wall\"").count(), 2);
    assert_eq!(svg.matches("stroke-dasharray").count(), 1); // only 1/6 is numerical
}

#[test]
fn negative_window_endpoints_parse() {
    let out = run(&[
        "walls", "--type", "1,1,0,0", "--genus", "2", "--canonical",
        "--window", "-3,3",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let alphas: Vec<&str> = text
        .lines()
        .map(|l| l.split('\t').next().unwrap())
        .collect();
    assert_eq!(alphas, vec!["-2", "0", "2"]);
}

#[test]
fn sweep_is_deterministic_across_thread_counts() {
    let sweep = |threads: &str| {
        bin()
            .args(["sweep", "--ranks", "2", "--degrees", "1", "--genus", "2", "--canonical"])
            .env("UPQ_WALLS_THREADS", threads)
            .output()
            .expect("binary runs")
    };
    let a = sweep("1");
    let b = sweep("4");
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "identical JSON lines for 1 vs 4 threads");
    for line in String::from_utf8(a.stdout).unwrap().lines() {
        serde_json::from_str::<serde_json::Value>(line).expect("each line is JSON");
    }
}

#[test]
fn check_subcommand_exit_zero() {
    let out = run(&["check", "--type", "3,2,0,2", "--genus", "2", "--canonical"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("passed"), "{text}");
}

#[test]
fn verdict_requires_alpha_or_wall() {
    let out = run(&["verdict", "--type", "3,2,0,2", "--genus", "2", "--canonical"]);
    assert_eq!(out.status.code(), Some(1));
}
