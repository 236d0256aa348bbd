//! End-to-end checks of the umbra binary: exit codes, report schemas, and
//! byte-stable output.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn umbra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_umbra"))
        .args(args)
        .output()
        .expect("umbra binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is utf-8")
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("umbra-cli-test-{}", name))
}

#[test]
fn seq_prints_single_rationals() {
    let out = umbra(&["seq", "bernoulli", "--n", "12"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "-691/2730\n");

    let out = umbra(&["seq", "zagier-bstar", "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "3/4\n");

    let out = umbra(&["seq", "genocchi", "--n", "8"]);
    assert_eq!(stdout_of(&out), "17\n");
}

#[test]
fn seq_prints_polynomial_families() {
    let out = umbra(&["seq", "hermite", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "-2 + 4*u^2\n");
}

#[test]
fn seq_usage_errors_exit_two() {
    let out = umbra(&["seq", "frobnitz", "--n", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("unknown sequence"));

    let out = umbra(&["seq", "gen-euler", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("needs --m"));

    let out = umbra(&["seq", "bernoulli", "--n", "2", "--m", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("does not apply"));

    let out = umbra(&["seq", "bernoulli", "--n", "-1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_single_entry_passes() {
    let out = umbra(&["verify", "--id", "mehler"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.starts_with("pass mehler ("));
    assert!(text.ends_with("1 passed, 0 failed\n"));
}

#[test]
fn verify_cap_override_shows_in_the_report_line() {
    let out = umbra(&["verify", "--id", "charlier-egf", "--cap", "x=3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("pass charlier-egf (x=3)"));
}

#[test]
fn verify_orders_output_by_catalog_not_by_flag_order() {
    let out = umbra(&["verify", "--id", "kaneko", "--id", "mehler", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let mehler = text.find("pass mehler").expect("mehler line");
    let kaneko = text.find("pass kaneko").expect("kaneko line");
    assert!(mehler < kaneko);
}

#[test]
fn verify_stdout_is_byte_stable() {
    let a = umbra(&["verify", "--id", "bell-rota", "--id", "q-binomial-theorem"]);
    let b = umbra(&["verify", "--id", "bell-rota", "--id", "q-binomial-theorem"]);
    assert_eq!(stdout_of(&a), stdout_of(&b));
}

#[test]
fn verify_usage_errors_exit_two() {
    let out = umbra(&["verify"]);
    assert_eq!(out.status.code(), Some(2));

    let out = umbra(&["verify", "--id", "no-such-identity"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("unknown identity id"));

    let out = umbra(&["verify", "--all", "--id", "mehler"]);
    assert_eq!(out.status.code(), Some(2));

    let out = umbra(&["verify", "--id", "mehler", "--cap", "x"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_writes_the_json_report_schema() {
    let path = temp_path("report.json");
    let out = umbra(&[
        "verify",
        "--id",
        "mehler",
        "--id",
        "q-binomial-theorem",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&path).expect("report written");
    let _ = fs::remove_file(&path);

    let rows: serde_json::Value = serde_json::from_str(&text).expect("valid json");
    let rows = rows.as_array().expect("array of reports");
    assert_eq!(rows.len(), 2);
    for row in rows {
        let obj = row.as_object().expect("report object");
        let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        keys.sort_unstable();
        assert_eq!(keys, ["caps", "id", "millis", "mismatch", "status"]);
        assert_eq!(obj["status"], "pass");
        assert!(obj["mismatch"].is_null());
        assert!(obj["millis"].is_u64());
        assert!(obj["caps"].as_object().unwrap().values().all(|v| v.is_u64()));
    }
    assert_eq!(rows[0]["id"], "mehler");
    assert_eq!(rows[1]["id"], "q-binomial-theorem");
}

#[test]
fn table_tau_writes_the_csv_grid() {
    let path = temp_path("tau.csv");
    let out = umbra(&[
        "table",
        "tau",
        "--jmax",
        "6",
        "--nmax",
        "6",
        "--csv",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&path).expect("csv written");
    let _ = fs::remove_file(&path);

    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("j,n,computed,predicted,sharp"));
    assert_eq!(lines.count(), 49);
}

#[test]
fn table_mu_prints_csv_to_stdout() {
    let out = umbra(&["table", "mu", "--jmax", "3", "--nmax", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.starts_with("j,n,computed,predicted,sharp\n"));
    assert_eq!(text.lines().count(), 1 + 2 * 5);
}

#[test]
fn table_probe_emits_without_gating() {
    let out = umbra(&["table", "probe", "--tmax", "1", "--nmax", "6", "--jmax", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.starts_with("t,j,n,computed,conjectured,exceptional\n"));
    assert!(text.contains(",?,"), "exceptional cells print ? for no prediction");
}

#[test]
fn cong_batteries_pass_at_default_ranges() {
    let out = umbra(&["cong", "refinements", "--nmax", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).lines().all(|l| !l.starts_with("FAIL")));

    let out = umbra(&["cong", "kummer", "--m", "4", "--p", "5"]);
    assert_eq!(out.status.code(), Some(0));

    let out = umbra(&["cong", "routes"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("ok   routes-bernoulli"));
}

#[test]
fn list_covers_the_whole_catalog() {
    let out = umbra(&["list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let expected = umbra_core::catalog::catalog_list().len();
    assert_eq!(text.lines().count(), expected + 1);
    assert!(text.contains("mehler"));
    assert!(text.ends_with(&format!("{} entries\n", expected)));
}

#[test]
fn list_json_mirrors_the_catalog_metadata() {
    let path = temp_path("list.json");
    let out = umbra(&["list", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&path).expect("list written");
    let _ = fs::remove_file(&path);

    let rows: serde_json::Value = serde_json::from_str(&text).expect("valid json");
    let rows = rows.as_array().expect("array of entries");
    assert_eq!(rows.len(), umbra_core::catalog::catalog_list().len());
    assert!(rows.iter().any(|r| r["id"] == "kaneko"));
}

#[test]
fn help_exits_zero() {
    let out = umbra(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let out = umbra(&["verify", "--help"]);
    assert_eq!(out.status.code(), Some(0));
}
