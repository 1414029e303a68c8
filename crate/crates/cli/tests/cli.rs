//! End-to-end tests against the compiled `kfk` binary: output fixtures,
//! exit codes, JSON round-trips and CSV determinism.

use std::process::{Command, Output};

use kfk_cli::json::FiberJson;

fn kfk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kfk"))
        .args(args)
        .env_remove("KFK_THREADS")
        .output()
        .expect("binary runs")
}

fn kfk_with_threads(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kfk"))
        .args(args)
        .env("KFK_THREADS", threads)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

#[test]
fn relator_prints_word() {
    let out = kfk(&["relator", "--n", "7", "--b", "2", "--t", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "yxyxxyxxYXYXXYXX\n");
}

#[test]
fn fiber_json_round_trips_from_stdout() {
    let out = kfk(&[
        "fiber", "--n", "7", "--b", "2", "--t", "4", "--p", "3", "--q", "2", "--json",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let doc: FiberJson = serde_json::from_str(&text).expect("valid JSON");
    assert_eq!(doc.schema, 1);
    assert!(doc.fibred);
    assert_eq!(doc.boundary_components, 7);
    assert_eq!(doc.weight.wx, -2);
    assert_eq!(doc.brown.max_positions, [1]);
    assert_eq!(doc.brown.min_positions, [9]);
    // Identical re-serialisation.
    assert_eq!(serde_json::to_string(&doc).unwrap() + "\n", text);
}

#[test]
fn fiber_human_output() {
    let out = kfk(&[
        "fiber", "--n", "7", "--b", "2", "--t", "4", "--p", "3", "--q", "2",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("fibred: true"));
    assert!(text.contains("boundary_components: 7"));
}

#[test]
fn slope_subcommands() {
    let out = kfk(&["slope", "parity", "--p", "3", "--q", "2"]);
    assert_eq!(stdout(&out), "12\n");
    let out = kfk(&[
        "slope", "dist", "--p1", "3", "--q1", "2", "--p2", "1", "--q2", "0",
    ]);
    assert_eq!(stdout(&out), "2\n");
    let out = kfk(&["slope", "clique", "--bound", "2"]);
    assert_eq!(stdout(&out), "size=3 witness=(0,1) (1,0) (1,1)\n");
}

#[test]
fn surgery_and_orbilens_and_cone() {
    let out = kfk(&["surgery", "--p", "5", "--q", "2", "--w", "3", "--m", "1"]);
    assert_eq!(stdout(&out), "13\n");
    let out = kfk(&["orbilens", "--a1", "4", "--a2", "6"]);
    assert_eq!(stdout(&out), "n=12 abar1=2 abar2=3 base_order=2\n");
    let out = kfk(&["cone", "--u", "1", "--v", "1", "--n", "7", "--m-max", "2"]);
    assert_eq!(
        stdout(&out),
        "m=1 class=(7,8) error=1/8\nm=2 class=(14,15) error=1/15\n"
    );
}

#[test]
fn alexander_prints_polynomial_and_monicity() {
    let out = kfk(&[
        "alexander",
        "--n",
        "7",
        "--b",
        "2",
        "--t",
        "4",
        "--p",
        "3",
        "--q",
        "2",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0:-1 7:1\nmonic: true\n");
}

#[test]
fn domain_errors_exit_one_with_error_name() {
    let out = kfk(&[
        "fiber", "--n", "7", "--b", "2", "--t", "4", "--p", "7", "--q", "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).starts_with("WindingNotCoprime"));

    let out = kfk(&["relator", "--n", "2", "--b", "1", "--t", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).starts_with("NotAKnot"));

    let out = kfk(&["surgery", "--p", "4", "--q", "2", "--w", "1", "--m", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).starts_with("InvalidInput"));

    let out = kfk(&["surgery", "--p", "1", "--q", "5", "--w", "1", "--m", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).starts_with("DegenerateSurgery"));
}

#[test]
fn bad_flags_exit_two() {
    let out = kfk(&["fiber", "--n", "7"]);
    assert_eq!(out.status.code(), Some(2));
    let out = kfk(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_csv_is_deterministic_across_thread_counts() {
    let args = ["sweep", "--max-n", "6", "--max-slope", "5"];
    let serial = kfk_with_threads(&args, "1");
    let parallel = kfk_with_threads(&args, "4");
    assert!(serial.status.success());
    assert!(parallel.status.success());
    assert_eq!(serial.stdout, parallel.stdout);
    let text = stdout(&serial);
    assert!(text.starts_with("n,b,t,p,q,wx,wy,max_pos,min_pos,fibred\n"));
    assert!(stderr(&serial).contains("0 falsifications"));
}

#[test]
fn sweep_csv_file_matches_stdout() {
    let dir = std::env::temp_dir().join("kfk-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sweep.csv");
    let args = ["sweep", "--max-n", "5", "--max-slope", "4"];
    let piped = kfk_with_threads(&args, "2");
    let mut file_args = args.to_vec();
    let path_str = path.to_str().unwrap();
    file_args.extend_from_slice(&["--csv", path_str]);
    let filed = kfk_with_threads(&file_args, "2");
    assert!(filed.status.success());
    assert!(filed.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, piped.stdout);
    std::fs::remove_file(&path).ok();
}
