use std::process::{Command, Output};

fn gridperim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gridperim"))
        .args(args)
        .env_remove("GRIDPERIM_ORACLE_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn solve_point_query() {
    let o = gridperim(&["solve", "--n", "11", "--format", "json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["p"], 16);
    assert_eq!(v["n"], 11);
    let volume: u64 = v["witness_profile"].as_array().unwrap().iter().map(|h| h.as_u64().unwrap()).sum();
    assert_eq!(volume, 11);
    assert!(v["upper"].is_null());

    let one = json(&gridperim(&["solve", "--n", "1"]));
    assert_eq!(one["p"], 3);
    assert_eq!(one["witness_params"]["a"], 1);
}

#[test]
fn solve_range_is_ordered_json_lines() {
    let o = gridperim(&["solve", "--from", "30", "--to", "40"]);
    assert!(o.status.success());
    let ns: Vec<u64> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["n"].as_u64().unwrap())
        .collect();
    assert_eq!(ns, (30..=40).collect::<Vec<_>>());
}

#[test]
fn solve_csv_columns() {
    let o = gridperim(&["solve", "--from", "35", "--to", "36", "--format", "csv"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,p,lower,upper,certified,a,c,k,last");
    assert_eq!(lines.len(), 3);
    let row35: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(row35.len(), 9);
    assert_eq!(row35[3], "", "undefined upper bound is empty");
    let row36: Vec<&str> = lines[2].split(',').collect();
    assert!(!row36[3].is_empty());
}

#[test]
fn bounds_lines() {
    let o = gridperim(&["bounds", "--from", "34", "--to", "37"]);
    assert!(o.status.success());
    let rows: Vec<serde_json::Value> =
        stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows[0]["upper"].is_null() && rows[0]["gap"].is_null());
    assert!(rows[2]["upper"].is_u64() && rows[2]["gap"].is_f64());
}

#[test]
fn oracle_modes() {
    let p = json(&gridperim(&["oracle", "--mode", "partitions", "--n", "20"]));
    assert_eq!(p["p"], json(&gridperim(&["solve", "--n", "20"]))["p"]);
    let e = json(&gridperim(&["oracle", "--mode", "exhaustive", "--n", "7", "--all-witnesses"]));
    assert_eq!(e["p"], 13);
    assert_eq!(e["witnesses"].as_array().unwrap().len(), 4);
}

#[test]
fn oracle_budget_exit_code() {
    let o = gridperim(&["oracle", "--mode", "exhaustive", "--n", "12"]);
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_gridperim"))
        .args(["oracle", "--mode", "partitions", "--n", "30"])
        .env("GRIDPERIM_ORACLE_BUDGET", "partitions=25")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(gridperim(&["solve", "--bogus"]).status.code(), Some(1));
    assert_eq!(gridperim(&["solve", "--from", "9", "--to", "3"]).status.code(), Some(1));
    assert_eq!(gridperim(&["solve", "--n", "0"]).status.code(), Some(1));
    assert_eq!(gridperim(&["render", "--n", "5"]).status.code(), Some(1));
    assert_eq!(gridperim(&["render", "--profile", "1,2", "--ascii"]).status.code(), Some(1));
    assert_eq!(gridperim(&["--help"]).status.code(), Some(0));
}

#[test]
fn plateaus_and_nested() {
    let o = gridperim(&["plateaus", "--to", "200", "--min-len", "3"]);
    assert!(o.status.success());
    let runs: Vec<serde_json::Value> =
        stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(!runs.is_empty());
    assert!(runs.iter().all(|r| r["length"].as_u64().unwrap() >= 3));

    let v = json(&gridperim(&["nested", "--to", "8"]));
    assert_eq!(v["chains_exist_to"], 8);
    assert_eq!(v["representative_chain"].as_array().unwrap().len(), 8);
}

#[test]
fn render_ascii_profile() {
    let o = gridperim(&["render", "--profile", "3,3,2,1", "--ascii"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "##\n###\n####\n");
    let o = gridperim(&["render", "--profile", "3,3,2,1", "--ascii", "--witness"]);
    assert!(stdout(&o).lines().last().unwrap().contains("boundary 14"));
}

#[test]
fn render_svg_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.svg");
    let o = gridperim(&["render", "--n", "11", "--witness", "--svg", path.to_str().unwrap()]);
    assert!(o.status.success());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<rect").count(), 11);
    assert_eq!(svg.matches("<line").count(), 16);
}

#[test]
fn verify_quick_reports_every_check() {
    let o = gridperim(&["verify", "--quick", "--json"]);
    let checks = json(&o);
    let checks = checks.as_array().unwrap();
    assert_eq!(checks.len(), 9);
    let any_failed = checks.iter().any(|c| c["status"] == "fail");
    assert_eq!(o.status.code(), Some(if any_failed { 3 } else { 0 }));
}
