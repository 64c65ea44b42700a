//! End-to-end tests of the command-line interface.

use std::path::PathBuf;
use std::process::{Command, Output};

fn specrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specrep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn specrep_in(dir: &std::path::Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specrep"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("specrep-cli-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn minpoly_standard_cases() {
    let out = specrep(&["minpoly", "--group", "S", "--lambda", "4,1", "--mu", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "(x^5-1)/(x-1) [case iii]\n");

    let out = specrep(&["minpoly", "--group", "S", "--lambda", "6", "--mu", "3,2,1"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("x-1 "));

    let out = specrep(&["minpoly", "--group", "A", "--lambda", "2,2+", "--mu", "3,1-"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "x-w^2 where w = zeta_3 [case vii]\n");
}

#[test]
fn minpoly_oracle_cross_check() {
    let out = specrep(&[
        "minpoly", "--group", "S", "--lambda", "3,3", "--mu", "6", "--oracle",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("(x^6-1)/(x^2+x+1)"));
    assert!(text.contains("oracle: agree"));
}

#[test]
fn minpoly_json_schema() {
    let out = specrep(&[
        "minpoly", "--group", "S", "--lambda", "2,1,1,1,1", "--mu", "6", "--format", "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["case"], "iv");
    assert_eq!(doc["minpoly"]["display"], "(x^6-1)/(x+1)");
    assert_eq!(doc["minpoly"]["order"], 6);
    assert_eq!(doc["minpoly"]["cyclotomic_factors"], serde_json::json!([1, 3, 6]));
}

#[test]
fn spectrum_output() {
    let out = specrep(&["spectrum", "--group", "S", "--lambda", "6,1", "--mu", "3,2,2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("o=6 E={0,2,3,4}"));

    let out = specrep(&[
        "spectrum", "--group", "S", "--lambda", "6,1", "--mu", "3,2,2", "--oracle",
    ]);
    let text = stdout(&out);
    assert!(text.contains("multiplicities: 0:2 2:1 3:2 4:1"));
    assert!(text.contains("classifier: agree"));

    let out = specrep(&[
        "spectrum", "--group", "A", "--lambda", "3,1,1+", "--mu", "5-", "--format", "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["exponents"], serde_json::json!([0, 2, 3]));
    assert_eq!(doc["case"], "v");
}

#[test]
fn character_values() {
    let out = specrep(&["character", "--group", "S", "--lambda", "4,1", "--mu", "5"]);
    assert_eq!(stdout(&out), "-1\n");

    let out = specrep(&["character", "--group", "A", "--lambda", "3,1,1+", "--mu", "5+"]);
    assert_eq!(stdout(&out), "(1+sqrt(5))/2\n");

    let out = specrep(&[
        "character", "--group", "A", "--lambda", "3,2", "--mu", "1,1,1,1,1", "--format", "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["value"], "5");
}

#[test]
fn table_is_deterministic_and_complete() {
    let a = specrep(&["table", "--group", "S", "--n", "4", "--format", "csv"]);
    let b = specrep(&["table", "--group", "S", "--n", "4", "--format", "csv"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "byte-identical reruns");
    let text = stdout(&a);
    // Header plus p(4)^2 = 25 rows.
    assert_eq!(text.lines().count(), 26);
    assert!(text.starts_with("lambda,mu,split,order,case,minpoly,exponents\n"));

    let out = specrep(&["table", "--group", "A", "--n", "4", "--format", "csv"]);
    let text = stdout(&out);
    assert!(text.contains("\"2,2+\",\"3,1\",+,3,vi,x-w where w = zeta_3,1"));
    assert!(text.contains("\"2,2+\",\"3,1\",-,3,vii,x-w^2 where w = zeta_3,2"));
    assert!(text.contains("\"2,2-\",\"2,2\",,2,viii,x-1,0"));

    // The square shapes on a 6-cycle show the two quotient polynomials.
    let out = specrep(&["table", "--group", "S", "--n", "6", "--format", "csv"]);
    let text = stdout(&out);
    assert!(text.contains("\"3,3\",6,,6,viii,(x^6-1)/(x^2+x+1),0 1 3 5"));
    assert!(text.contains("\"2,2,2\",6,,6,ix,(x^6-1)/(x^2-x+1),0 2 3 4"));
}

#[test]
fn table_matches_golden_files() {
    let out = specrep(&["table", "--group", "S", "--n", "4", "--format", "csv"]);
    assert_eq!(stdout(&out), include_str!("golden/table_s4.csv"));

    let out = specrep(&["table", "--group", "A", "--n", "5", "--format", "csv"]);
    assert_eq!(stdout(&out), include_str!("golden/table_a5.csv"));
}

#[test]
fn table_respects_ceiling() {
    let out = specrep(&["table", "--group", "S", "--n", "13"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("ceiling"));

    let out = specrep(&["table", "--group", "S", "--n", "2", "--ceiling", "2"]);
    assert!(out.status.success());
}

#[test]
fn verify_writes_report_and_exit_code() {
    let dir = temp_dir("verify");
    let out = specrep_in(
        &dir,
        &["verify", "--group", "S", "--n", "4", "--workers", "2"],
    );
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("n=4: 25 pairs, 0 mismatches"));
    assert!(text.contains("verdict: all spectra agree"));

    let report_path = dir.join("specrep-verify-S4.json");
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(doc["group"], "S");
    assert_eq!(doc["total_mismatches"], 0);
    assert_eq!(doc["per_n"][2]["pairs_checked"], 25);
    assert!(doc["per_n"][2]["case_histogram"].is_object());
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn verify_refuses_beyond_ceiling() {
    let out = specrep(&["verify", "--group", "S", "--n", "13"]);
    assert!(!out.status.success());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("ceiling"));
}

#[test]
fn cache_warm_status_clear_cycle() {
    let dir = temp_dir("cache");
    let dir_s = dir.to_str().unwrap();

    let out = specrep(&["cache", "--cache-dir", dir_s, "warm", "--n", "4"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert!(dir.join("specrep-chars-v1-n4.json").is_file());

    let out = specrep(&["cache", "--cache-dir", dir_s, "status"]);
    let text = stdout(&out);
    assert!(text.contains("specrep-chars-v1-n2.json"));
    assert!(text.contains("specrep-chars-v1-n4.json"));

    let out = specrep(&["cache", "--cache-dir", dir_s, "clear"]);
    assert!(stdout(&out).contains("removed 3"));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn cache_dir_from_environment() {
    let dir = temp_dir("cache-env");
    let out = Command::new(env!("CARGO_BIN_EXE_specrep"))
        .env("SPECREP_CACHE_DIR", &dir)
        .args(["cache", "warm", "--n", "3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(dir.join("specrep-chars-v1-n3.json").is_file());
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn malformed_inputs_are_usage_errors() {
    // Parts out of order.
    let out = specrep(&["minpoly", "--group", "S", "--lambda", "3,4", "--mu", "7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("weakly decreasing"));

    // Size mismatch.
    let out = specrep(&["minpoly", "--group", "S", "--lambda", "3,1", "--mu", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("size mismatch"));

    // Split sign on a symmetric-group query.
    let out = specrep(&["minpoly", "--group", "S", "--lambda", "2,2+", "--mu", "4"]);
    assert_eq!(out.status.code(), Some(2));

    // Split class without its required sign.
    let out = specrep(&["minpoly", "--group", "A", "--lambda", "4,1", "--mu", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("split"));

    // Odd class in the alternating group.
    let out = specrep(&["minpoly", "--group", "A", "--lambda", "3,1", "--mu", "2,1,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("odd"));

    // Trivial character.
    let out = specrep(&["minpoly", "--group", "A", "--lambda", "4", "--mu", "2,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("trivial"));
}
