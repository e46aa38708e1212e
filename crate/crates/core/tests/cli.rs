use std::path::Path;
use std::process::{Command, Output};

use z2harm::format::read_set_file;
use z2harm::PointSet;

fn z2harm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_z2harm")).args(args).output().unwrap()
}

fn path_arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn generate_xk_writes_64_points() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("x.pts");
    let out = z2harm(&["generate", "xk", "--d", "2", "--k", "3", "--out", path_arg(&file)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(read_set_file(&file).unwrap().len(), 64);
    let header = String::from_utf8(out.stderr).unwrap();
    assert!(header.starts_with(&format!("# z2harm {}", env!("CARGO_PKG_VERSION"))));
}

#[test]
fn xplus_passes_the_cross_check() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("xplus.pts");
    let gen = z2harm(&["generate", "xplus", "--d", "2", "--radius", "64", "--out", path_arg(&file)]);
    assert_eq!(gen.status.code(), Some(0));
    let out = z2harm(&["verify", "cross", "--in", path_arg(&file), "--radius", "32"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "# predicate=cross region_center=0,0 region_radius=32 violations=0\n");
}

#[test]
fn harmonic_check_reports_odd_points_of_x2() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("xk_d2_k2.pts");
    z2harm(&["generate", "xk", "--d", "2", "--k", "2", "--out", path_arg(&file)]);
    let report = dir.path().join("report.txt");
    let out = z2harm(&["verify", "harmonic", "--in", path_arg(&file), "--radius", "8", "--out", path_arg(&report)]);
    assert_eq!(out.status.code(), Some(1));
    let text = std::fs::read_to_string(&report).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().ends_with("violations=4"));
    let witnesses: Vec<&str> = lines.collect();
    assert_eq!(witnesses, ["-4,0", "0,-4", "0,4", "4,0"]);
}

#[test]
fn verify_with_offset_centre() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("x.pts");
    z2harm(&["generate", "xinf", "--d", "2", "--radius", "40", "--out", path_arg(&file)]);
    let out = z2harm(&["verify", "supportive", "--in", path_arg(&file), "--radius", "10", "--center", "-7,12"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("region_center=-7,12"));
}

#[test]
fn unknown_flag_prints_usage_and_exits_two() {
    let out = z2harm(&["generate", "xk", "--d", "2", "--k", "3", "--colour"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8(out.stderr).unwrap().contains("Usage"));
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.pts");
    std::fs::write(&file, "# d=2 n=2\n1,2\n3\n").unwrap();
    let out = z2harm(&["verify", "cross", "--in", path_arg(&file), "--radius", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("error:"));
}

#[test]
fn budget_overrun_exits_two() {
    let out = z2harm(&["generate", "xk", "--d", "4", "--k", "12"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dimension_on_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("x.pts");
    std::fs::write(&file, z2harm::format::set_to_string(&PointSet::from_flat(1, (-50..=50).collect()))).unwrap();
    let out = z2harm(&["dimension", "--generator", "file", "--in", path_arg(&file), "--radii", "4,8,16,32"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("radius,count\n4,9\n8,17\n16,33\n32,65\n# slope="));
}

#[test]
fn minweight_reports_relaxed_bound_and_witness() {
    let out = z2harm(&["minweight", "--d", "2", "--radius", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n=2 r=1 relaxed_min_weight=1"));
    assert!(lines.next().unwrap().starts_with('#'));
    assert_eq!(lines.next(), Some("# d=2 n=1"));
    assert_eq!(lines.next(), Some("0,0"));
}

#[test]
fn census_summary_line() {
    let out = z2harm(&["walk", "census", "--d", "2", "--n", "3", "--k", "1", "--radius", "512"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("sequence,endpoint,psi\n"));
    assert!(text.contains("# sequences=64 distinct=64 max_multiplicity=1\n"));
    assert!(text.contains("opposing_start_collisions=0"));
}

#[test]
fn lemma42_trials_all_hold() {
    let out = z2harm(&["walk", "lemma42", "--d", "3", "--radius", "70", "--trials", "40", "--max-r", "60", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.ends_with("# trials=40 failed=0\n"));
}

#[test]
fn walk_outside_region_exits_two() {
    let out = z2harm(&["walk", "lemma42", "--d", "2", "--radius", "20", "--trials", "10", "--max-r", "30", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(2));
}
