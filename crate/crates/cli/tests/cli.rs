use std::path::Path;
use std::process::{Command, Output};

fn k3verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_k3verify")).args(args).env_remove("K3V_CACHE").output().unwrap()
}

fn schema() -> serde_json::Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/report.schema.json");
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = k3verify(&["nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(k3verify(&["golay", "--ext-degree", "4"]).status.code(), Some(2));
}

#[test]
fn golay_suite_passes() {
    let out = k3verify(&["golay"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS  golay.steiner"));
    // the misprint is a warning and does not change the exit code
    assert!(text.contains("WARN  golay.todd_duplicates"));
}

#[test]
fn json_report_matches_schema() {
    let out = k3verify(&["golay", "geometry", "--format", "json", "--timings"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let validator = jsonschema::validator_for(&schema()).unwrap();
    let errors: Vec<String> = validator.iter_errors(&report).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}");
    let checks = report["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["elapsed_ms"].is_u64()));
    assert_eq!(report["summary"]["total"].as_u64().unwrap() as usize, checks.len());
}

#[test]
fn schema_rejects_malformed_reports() {
    let validator = jsonschema::validator_for(&schema()).unwrap();
    let bad = serde_json::json!({
        "version": "1",
        "checks": [{ "id": "golay.octads", "suite": "golay", "criterion": 1, "status": "maybe", "expected": "", "actual": "" }],
        "summary": { "total": 1, "pass": 0, "fail": 0, "warn": 0, "info": 0 }
    });
    assert!(!validator.is_valid(&bad));
}

#[test]
fn report_can_be_written_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = k3verify(&["golay", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let report: serde_json::Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(report["summary"]["fail"], 0);
}

fn export(kind: &str, format: &str, dir: &Path) -> (Output, Vec<u8>) {
    let path = dir.join(format!("{kind}.{format}"));
    let out = k3verify(&["export", kind, path.to_str().unwrap(), "--format", format]);
    let bytes = std::fs::read(&path).unwrap_or_default();
    (out, bytes)
}

#[test]
fn exports_have_the_documented_shapes() {
    let dir = tempfile::tempdir().unwrap();

    let (out, bytes) = export("octads", "json", dir.path());
    assert!(out.status.success());
    let octads: serde_json::Value = serde_json::from_slice(&bytes).unwrap();
    assert_eq!(octads.as_array().unwrap().len(), 759);

    let (out, bytes) = export("incidence", "csv", dir.path());
    assert!(out.status.success());
    let mut reader = csv::Reader::from_reader(bytes.as_slice());
    assert_eq!(reader.headers().unwrap().len(), 43);
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 42);
    assert!(rows.iter().all(|r| r.len() == 43));
    let ones: usize = rows.iter().map(|r| r.iter().skip(1).filter(|c| *c == "1").count()).sum();
    assert_eq!(ones, 2 * 105);

    let (out, bytes) = export("gram", "json", dir.path());
    assert!(out.status.success());
    let gram: Vec<Vec<i64>> = serde_json::from_slice(&bytes).unwrap();
    assert_eq!(gram.len(), 22);
    assert!(gram.iter().enumerate().all(|(i, r)| r.len() == 22 && r[i] % 2 == 0));

    let (out, bytes) = export("roots42", "csv", dir.path());
    assert!(out.status.success());
    assert_eq!(String::from_utf8(bytes).unwrap().lines().count(), 43);
}

#[test]
fn unsupported_export_fails() {
    let dir = tempfile::tempdir().unwrap();
    let (out, _) = export("octads", "bin", dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("cannot be exported"));
    assert!(!dir.path().join("octads.bin").exists());
}

#[test]
fn exports_are_byte_stable() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    for (kind, format) in [("roots168", "json"), ("configs", "json"), ("gram", "csv")] {
        let (_, x) = export(kind, format, a.path());
        let (_, y) = export(kind, format, b.path());
        assert!(!x.is_empty());
        assert_eq!(x, y, "{kind} {format}");
    }
}

#[test]
fn cache_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_k3verify"))
            .args(["leech", "--format", "json"])
            .env("K3V_CACHE", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert!(first.status.success());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let second = run();
    assert!(second.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn jobs_flag_is_accepted() {
    let out = k3verify(&["geometry", "--jobs", "2", "--format", "json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["summary"]["fail"], 0);
}
