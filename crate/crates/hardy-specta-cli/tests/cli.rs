use std::fs;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hardy-specta"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn spectrum_reports_the_closed_disc() {
    let out = run(&["spectrum", "--class", "HNA_I", "--r", "0.5", "--p", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"variant\":\"ClosedDisk\""));
    assert!(text.contains("\"radius\":1.4142135623730951e0"));
    assert!(text.contains("\"runConfig\""));
}

#[test]
fn spectrum_output_is_byte_identical_across_runs() {
    let a = run(&["spectrum", "--class", "HA", "--r", "0.5", "--p", "2"]);
    let b = run(&["spectrum", "--class", "HA", "--r", "0.5", "--p", "2"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn classify_reads_symbol_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ha.json");
    fs::write(&path, r#"{"a":[1,0],"b":[0.5,0],"c":[0.5,0],"d":[1,0]}"#).unwrap();
    let out = run(&["classify", "--symbol", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"class\":\"HA\""));
    assert!(text.contains("\"conjugatorIsDiscAutomorphism\":true"));
}

#[test]
fn classify_rejects_non_self_maps_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("double.json");
    fs::write(&path, r#"{"a":[2,0],"b":[0,0],"c":[0,0],"d":[1,0]}"#).unwrap();
    let out = run(&["classify", "--symbol", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("unit disc"));
}

#[test]
fn malformed_symbol_json_reports_byte_offset_and_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    fs::write(&path, "{\"a\":[1,0],\n\"b\":oops}").unwrap();
    let out = run(&["classify", "--symbol", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("byte offset"), "stderr: {}", err);
}

#[test]
fn unknown_flags_exit_two() {
    let out = run(&["classify", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verdict_all_true_for_loxodromic() {
    let out = run(&["verdict", "--class", "LOX", "--a", "0.3,0", "--c", "0,0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"dunfordC\":\"true\""));
    assert!(text.contains("\"dunfordCAdjoint\":\"true\""));
    assert!(text.contains("Kamowitz"));
}

#[test]
fn verdict_accepts_p_equal_one_with_warning() {
    let out = run(&["verdict", "--class", "HA", "--r", "0.5", "--p", "1"]);
    assert!(out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("warning"));
    assert!(stdout(&out).contains("\"svep\":\"false\""));
}

#[test]
fn eigen_reports_the_principal_branch_eigenvalue() {
    let out = run(&[
        "eigen", "--class", "HA", "--r", "0.5", "--generator", "0.3,0", "--trunc", "16",
        "--quad", "64",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("\"eigenvalue\":[1.3903891703159095e0"));
}

#[test]
fn localspec_trichotomy_branch_for_vanishing_functions() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z.json");
    fs::write(&path, r#"{"p":2,"coeffs":[[0,0],[1,0]]}"#).unwrap();
    let out = run(&[
        "localspec", "--class", "HNA_II", "--r", "0.25", "--fn",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"variant\":\"ClosedDisk\""));
    assert!(text.contains("\"predictedRadius\":5.0000000000000000e-1"));

    let out = run(&[
        "localradius", "--class", "HNA_II", "--r", "0.25", "--fn",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("\"predictedRadius\":5.0000000000000000e-1"));
}

#[test]
fn verify_similarity_suite_passes() {
    let out = run(&["verify", "--suite", "similarity"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with('['));
    assert!(text.contains("\"passed\":true"));
    assert!(!text.contains("\"passed\":false"));
    let parsed: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(parsed.as_array().unwrap().len(), 6);
}

#[test]
fn verify_fuzz_is_seeded_and_deterministic() {
    let a = run(&["verify", "--suite", "fuzz", "--seed", "7"]);
    let b = run(&["verify", "--suite", "fuzz", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn raster_emits_grid_and_pgm() {
    let dir = tempfile::tempdir().unwrap();
    let pgm_path = dir.path().join("spectrum.pgm");
    let out = run(&[
        "raster", "--class", "HNA_II", "--r", "0.25", "--p", "2", "--raster", "32", "32",
        "--out", pgm_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    // The isolated eigenvalue 1 is snapped to a pixel and recorded exactly.
    assert!(text.contains("\"isolatedPoints\":[{\"point\":[1.0000000000000000e0"));
    let pgm = fs::read_to_string(&pgm_path).unwrap();
    assert!(pgm.starts_with("P2\n32 32\n1\n"));
    assert!(pgm.contains('1'));
    assert!(pgm.contains('0'));

    // Annulus rasters leave the hole at the centre dark.
    let out = run(&[
        "raster", "--class", "HA", "--r", "0.5", "--p", "2", "--raster", "33", "33",
    ]);
    assert!(out.status.success());
    let parsed: serde_json::Value =
        serde_json::from_str(stdout(&out).trim()).expect("grid JSON parses");
    let grid = parsed["grid"].as_array().unwrap();
    assert_eq!(grid.len(), 33);
    // Centre pixel of an odd grid sits at the origin, inside the hole.
    assert_eq!(grid[16][16], 0);
    // A pixel at radius ~1 lies inside the annulus: x = 1 is about
    // 0.46 * extent right of centre with extent = 1.25 * sqrt(3).
    let extent = 1.25 * 3f64.sqrt();
    let col = (((1.0 + extent) / (2.0 * extent)) * 33.0).floor() as usize;
    assert_eq!(grid[16][col], 1);

    // Numeric-only spectra cannot be rasterised.
    let out = run(&[
        "raster", "--class", "PNA", "--a", "1,0", "--raster", "32", "32",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn tolerance_env_override_must_be_numeric() {
    let out = bin()
        .args(["spectrum", "--class", "HA", "--r", "0.5"])
        .env("HARDY_SPECTA_TOL", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .args(["spectrum", "--class", "HA", "--r", "0.5"])
        .env("HARDY_SPECTA_TOL", "1e-9")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("\"epsFix\":1.0000000000000001e-9"));
}

#[test]
fn quadrature_and_truncation_floors_are_usage_errors() {
    let out = run(&["spectrum", "--class", "HA", "--r", "0.5", "--trunc", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[
        "spectrum", "--class", "HA", "--r", "0.5", "--trunc", "128", "--quad", "100",
    ]);
    assert_eq!(out.status.code(), Some(2));
}
