use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use lfactor_lab::commands::check_golden;
use lfactor_lab::config::{GoldenSpec, RunConfig};

fn configs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("configs")
}

fn lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lfactor-lab")).args(args).output().expect("binary runs")
}

fn config_arg(name: &str) -> String {
    configs().join(name).to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_config(name: &str, json: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lfactor-lab-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, json).unwrap();
    path
}

#[test]
fn gl2_standard_basic_function_has_five_rows() {
    let o = lab(&["basic-fn", "--config", &config_arg("gl2_std.json"), "--format", "tsv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<Vec<&str>> = text.lines().skip(1).filter(|l| !l.starts_with('#')).map(|l| l.split('\t').collect()).collect();
    assert_eq!(rows.len(), 5);
    for row in &rows {
        let expected = if row[0] == "1" { "-1/2" } else { "1/4" };
        assert_eq!(row[2], expected, "{row:?}");
    }
}

#[test]
fn order_flag_overrides_config() {
    let o = lab(&["basic-fn", "--config", &config_arg("gl2_std.json"), "--order", "1", "--format", "tsv"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().filter(|l| !l.starts_with('#')).count(), 3);
}

#[test]
fn lfactor_and_zeta_reports() {
    let o = lab(&["lfactor", "--config", &config_arg("torus.json")]);
    assert!(stdout(&o).contains("L: 1 / (1 - 3*t)"));
    let o = lab(&["zeta", "--config", &config_arg("gl2_principal_series.json"), "--order", "6"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("ideal generator: (1) / (1 - 2*t - 35*t^2)"), "{text}");
    assert!(text.contains("agrees: yes"));
    let o = lab(&["zeta", "--config", &config_arg("gl2_steinberg_mat_o.json")]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("agrees: no"));
}

#[test]
fn configuration_errors_exit_with_one() {
    let bad_q = temp_config("bad_q.json", r#"{"schema_version": 1, "group": {"kind": "gl", "n": 2}, "rho": "standard", "q": "-4"}"#);
    let o = lab(&["basic-fn", "--config", bad_q.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("q must be a positive rational"));
    let unknown = temp_config("unknown.json", r#"{"schema_version": 1, "colour": "red"}"#);
    assert_eq!(lab(&["lfactor", "--config", unknown.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(lab(&["lfactor", "--config", "/nonexistent/config.json"]).status.code(), Some(1));
}

#[test]
fn computation_errors_exit_with_two() {
    let path = temp_config(
        "degenerate.json",
        r#"{"schema_version": 1, "group": {"kind": "gl", "n": 2}, "rho": "standard", "q": "4", "satake": ["2", "3"], "jordan": [2]}"#,
    );
    assert_eq!(lab(&["lfactor", "--config", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn stored_golden_files_match() {
    let config = RunConfig::load(&configs().join("selfcheck.json")).unwrap();
    assert_eq!(config.golden.len(), 5);
    for golden in &config.golden {
        let (ok, detail) = check_golden(golden, &configs());
        assert!(ok, "{}: {detail}", golden.expected);
    }
}

#[test]
fn corrupted_golden_file_fails() {
    let original = std::fs::read_to_string(configs().join("golden/gl2_std_basic-fn.tsv")).unwrap();
    let corrupted = temp_config("corrupted.tsv", &original.replace("-1/2", "-1/3"));
    let golden = GoldenSpec {
        command: "basic-fn".into(),
        config: config_arg("gl2_std.json"),
        expected: corrupted.to_string_lossy().into_owned(),
    };
    let (ok, detail) = check_golden(&golden, &configs());
    assert!(!ok);
    assert_eq!(detail, "differs at line 2");
}
