use std::process::{Command, Output};

use polypseudolog::verify::{CheckId, CheckReport, Status};
use serde_json::Value;

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polypseudolog")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = cli(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

fn golden(name: &str) -> Value {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn table_matches_golden() {
    assert_eq!(json(&["table", "--range", "3"]), golden("table_3.json"));
}

#[test]
fn tangent_matches_golden() {
    assert_eq!(json(&["numbers", "tangent", "--range", "4"]), golden("tangent_4.json"));
}

#[test]
fn table_csv() {
    let text = stdout(&["--format", "csv", "table", "--range", "3"]);
    assert_eq!(text, "n,numerator,den_exp\n0,\"0 1\",1\n1,\"0 1\",2\n2,\"0 1 1\",3\n3,\"0 1 4 1\",4\n");
}

#[test]
fn table_latex() {
    let text = stdout(&["--format", "latex", "table", "--range", "2"]);
    assert!(text.starts_with("\\begin{align*}"));
    assert!(text.contains("&\\mathrm{Li}_{-2}(z) = z (1+z)/(1-z)^{3}."));
    assert!(text.trim_end().ends_with("\\end{align*}"));
}

#[test]
fn eval_exact_and_approx() {
    let v = json(&["eval", "3", "1/3", "--approx", "10"]);
    assert_eq!(v["value"], "33/8");
    assert_eq!(v["approx"], "4.1250000000");
    let v = json(&["eval", "1", "-1"]);
    assert_eq!(v["value"], "-1/4");
    assert!(v.get("approx").is_none());
}

#[test]
fn numbers_bernoulli_and_stirling() {
    let v = json(&["numbers", "bernoulli", "--range", "4"]);
    assert_eq!(v["values"], serde_json::json!(["1", "-1/2", "1/6", "0", "-1/30"]));
    let text = stdout(&["numbers", "stirling2", "--range", "3", "--format", "csv"]);
    assert_eq!(text.lines().last(), Some("3,\"0 1 3 1\""));
    let v = json(&["numbers", "eulerian", "--range", "4"]);
    assert_eq!(v["rows"][4], serde_json::json!([0, 1, 11, 11, 1]));
}

#[test]
fn exit_codes() {
    let pole = cli(&["eval", "2", "1"]);
    assert_eq!(pole.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&pole.stderr).contains("pole"));
    assert_eq!(cli(&["eval", "2", "1/0"]).status.code(), Some(2));
    assert_eq!(cli(&["numbers", "catalan"]).status.code(), Some(2));
    assert_eq!(cli(&["verify", "--checks", "nonsense"]).status.code(), Some(2));
    assert_eq!(cli(&[]).status.code(), Some(2));
}

#[test]
fn verify_reports_deserialize() {
    let v = json(&["verify", "--range", "4", "--checks", "recurrence,inversion,triangles"]);
    assert_eq!(v["all_pass"], true);
    let reports: Vec<CheckReport> = serde_json::from_value(v["reports"].clone()).unwrap();
    let ids: Vec<_> = reports.iter().map(|r| r.check_id).collect();
    assert_eq!(ids, vec![CheckId::Recurrence, CheckId::Inversion, CheckId::Triangles]);
    assert!(reports.iter().all(|r| r.status == Status::Pass && r.order_range.1 == 4));
}

#[test]
fn verify_csv_with_seed() {
    let text = stdout(&["--format", "csv", "verify", "--range", "3", "--checks", "duplication", "--seed", "7"]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("check_id,n_min,n_max,status,witness_n,witness_z,expected,actual"));
    assert!(lines.next().unwrap().starts_with("duplication,"));
}

#[test]
fn out_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.json");
    let out = cli(&["--out", path.to_str().unwrap(), "table", "--range", "3"]);
    assert!(out.status.success());
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written, golden("table_3.json"));
}
