//! Golden-file tests for every subcommand. Set `UPDATE_GOLDEN=1` to rewrite
//! the expected outputs after an intentional change.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

fn dir(sub: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join(sub)
}

fn run(args: &[&str], stdin: Option<&str>) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_schurpaths"))
        .args(args)
        .current_dir(dir("inputs"))
        .env("SCHURPATHS_WORKERS", "2")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().expect("exited normally"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

/// Timing is the only nondeterministic field of a report.
fn strip_timings(stdout: &str) -> String {
    stdout
        .lines()
        .map(|line| match serde_json::from_str::<serde_json::Value>(line) {
            Ok(mut v) if v.get("elapsed_ms").is_some() => {
                v.as_object_mut().unwrap().remove("elapsed_ms");
                v.to_string()
            }
            _ => line.to_string(),
        })
        .map(|l| l + "\n")
        .collect()
}

fn golden(name: &str, actual: &str) {
    let path = dir("golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "output differs from {}", path.display());
}

fn check(name: &str, args: &[&str], code: i32) {
    let (status, stdout, stderr) = run(args, None);
    assert_eq!(status, code, "{args:?}: stderr = {stderr}");
    golden(name, &strip_timings(&stdout));
}

#[test]
fn schur_all_algorithms_agree() {
    check("schur_2_1_all.txt", &["schur", "--shape", "[2,1]", "--vars", "3", "--alg", "all"], 0);
}

#[test]
fn schur_empty_shape_is_one() {
    check("schur_empty.txt", &["schur", "--shape", "[]", "--vars", "1"], 0);
}

#[test]
fn schur_json_and_csv() {
    check("schur_3_1_json.txt", &["schur", "--shape", "[3,1]", "--vars", "2", "--alg", "all", "--format", "json"], 0);
    check("schur_2_2_csv.txt", &["schur", "--shape", "[2,2]", "--vars", "3", "--alg", "hdet", "--format", "csv"], 0);
}

#[test]
fn schur_rejects_increasing_shape() {
    let (status, stdout, stderr) = run(&["schur", "--shape", "[1,2]"], None);
    assert_eq!(status, 2);
    assert!(stdout.is_empty());
    assert!(stderr.contains("weakly decreasing"), "{stderr}");
}

#[test]
fn schur_too_many_parts_is_a_usage_error() {
    let (status, _, stderr) = run(&["schur", "--shape", "[1,1,1]", "--vars", "2"], None);
    assert_eq!(status, 2, "{stderr}");
}

#[test]
fn verify_small_grid() {
    check("verify_all_2_2.txt", &["verify", "--suite", "all", "--max-n", "2", "--max-m", "2"], 0);
}

#[test]
fn verify_gv_shapes() {
    check("verify_gv_2_2.txt", &["verify", "--suite", "gv", "--shapes-in-box", "2,2"], 0);
}

#[test]
fn verify_empty_grid() {
    check("verify_empty.txt", &["verify", "--max-n", "0"], 0);
}

#[test]
fn verify_default_grid_passes() {
    let (status, stdout, _) = run(&["verify"], None);
    assert_eq!(status, 0);
    let summary = stdout.lines().last().unwrap();
    let (passed, total) =
        summary.strip_prefix("summary: ").unwrap().strip_suffix(" passed").unwrap().split_once('/').unwrap();
    assert_eq!(passed, total);
}

#[test]
fn verify_fuzz_is_reproducible() {
    check("verify_fuzz_7.txt", &["verify", "--fuzz-seed", "7", "--fuzz-count", "5", "--max-n", "3", "--max-m", "2"], 0);
}

#[test]
fn verify_unknown_suite() {
    assert_eq!(run(&["verify", "--suite", "bogus"], None).0, 2);
}

#[test]
fn count_subcommand() {
    check("count_2_2_2_number.txt", &["count", "--n", "2", "--l", "2", "--m", "2", "--what", "number"], 0);
    check("count_1_1_4_genfunc.txt", &["count", "--n", "1", "--l", "1", "--m", "4", "--what", "genfunc"], 0);
    check("count_0.txt", &["count", "--n", "0", "--l", "2", "--m", "2"], 0);
    check(
        "count_2_2_2_zq_csv.txt",
        &["count", "--n", "2", "--l", "2", "--m", "2", "--what", "zq", "--format", "csv"],
        0,
    );
    check("count_3_3_3_json.txt", &["count", "--n", "3", "--l", "3", "--m", "3", "--format", "json"], 0);
    assert_eq!(run(&["count", "--n", "-1", "--l", "1", "--m", "1"], None).0, 2);
}

#[test]
fn enumerate_subcommand() {
    check("enumerate_pp_1_2_1.txt", &["enumerate", "plane-partitions", "--n", "1", "--l", "2", "--m", "1"], 0);
    check("enumerate_wm_2_1_1.txt", &["enumerate", "watermelons", "--n", "2", "--l", "1", "--m", "1"], 0);
    assert_eq!(run(&["enumerate", "watermelons", "--n", "1", "--l", "2", "--m", "1"], None).0, 2);
}

#[test]
fn render_watermelons() {
    check("render_minimal_watermelon.txt", &["render", "minimal_watermelon.json"], 0);
    check("render_watermelon_3_2_2.txt", &["render", "watermelon_3_2_2.json"], 0);
    check("render_watermelon_3_2_2.svg", &["render", "watermelon_3_2_2.json", "--style", "svg"], 0);
}

#[test]
fn render_plane_partitions() {
    check("render_empty_plane_partition.txt", &["render", "empty_plane_partition.json"], 0);
    check("render_plane_partition.txt", &["render", "plane_partition.json"], 0);
    check("render_plane_partition.svg", &["render", "plane_partition.json", "--style", "svg"], 0);
    check("render_empty_plane_partition.svg", &["render", "empty_plane_partition.json", "--style", "svg"], 0);
}

#[test]
fn render_is_byte_identical_across_runs_and_stdin() {
    let input = std::fs::read_to_string(dir("inputs").join("plane_partition.json")).unwrap();
    let a = run(&["render", "--style", "svg"], Some(&input));
    let b = run(&["render", "plane_partition.json", "--style", "svg"], None);
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
}

#[test]
fn render_rejects_malformed_input() {
    assert_eq!(run(&["render", "truncated.json"], None).0, 2);
    assert_eq!(run(&["render"], Some("[1,2,3]")).0, 2);
    assert_eq!(run(&["render"], Some(r#"{"N":1,"L":1,"M":1,"parts":[[2]],"volume":2}"#)).0, 2);
    assert_eq!(
        run(&["render"], Some(r#"{"N":1,"M":1,"k":0,"lambda":[0],"c_steps":[[0]],"b_steps":[[1]],"volume":3}"#)).0,
        2
    );
    assert_eq!(run(&["render", "missing.json"], None).0, 2);
}
