use std::fs;
use std::process::{Command, Output};

const EXAMPLE: &str = "a^* + a^*bb^* + a^*bb^*aa^* + a^*bb^*aa^*bb^*";

fn minpump(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minpump")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_example_as_json() {
    let o = minpump(&["analyze", EXAMPLE, "--format", "json"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("\"mpc\":1") && out.contains("\"sc\":5"), "{out}");
}

#[test]
fn analyze_with_witnesses() {
    let o = minpump(&["analyze", "(a^2)^* + (b^3)^*", "--witnesses"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("mpl 3") && out.contains("sc 7"), "{out}");
    assert!(out.contains("mpl − 1 defeated by: bbb"), "{out}");
}

#[test]
fn verify_star_passes() {
    let o = minpump(&["verify", "star", "--max-param", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("PASS star"));
}

#[test]
fn verify_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let md = dir.path().join("report.md");
    let json = dir.path().join("report.json");
    for path in [&md, &json] {
        let o = minpump(&["verify", "binary", "--max-param", "3", "--report", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    assert!(fs::read_to_string(&md).unwrap().contains("| binary | 10 | 10 | 0 | pass |"));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v[0]["results"].as_array().unwrap().len(), 10);
}

#[test]
fn failing_suite_exits_one() {
    let o = minpump(&["verify", "loopify", "--samples", "100"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL loopify"));
}

#[test]
fn double_complement_is_identity() {
    let dir = tempfile::tempdir().unwrap();
    let (orig, once, twice) = (dir.path().join("d.txt"), dir.path().join("c.txt"), dir.path().join("cc.txt"));
    let o = minpump(&["apply", "reversal", "ab^*a + (ba)^*", "-o", orig.to_str().unwrap()]);
    assert!(o.status.success());
    for (from, to) in [(&orig, &once), (&once, &twice)] {
        let o = minpump(&["apply", "complement", from.to_str().unwrap(), "-o", to.to_str().unwrap()]);
        assert!(o.status.success());
    }
    assert_eq!(fs::read(&orig).unwrap(), fs::read(&twice).unwrap());
    assert_ne!(fs::read(&orig).unwrap(), fs::read(&once).unwrap());
}

#[test]
fn constructed_witness_measures_its_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q.json");
    let p = path.to_str().unwrap();
    let args = ["construct", "quinary", "--p1", "2", "--p2", "3", "--p3", "4", "--p4", "4", "--format", "json", "-o", p];
    assert!(minpump(&args).status.success());
    let out = stdout(&minpump(&["analyze", p, "--format", "json"]));
    assert_eq!(out.trim(), r#"{"mpc":2,"mpl":3,"mps":4,"sc":4}"#);
}

#[test]
fn loopify_reads_state_and_symbol() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.txt");
    let p = path.to_str().unwrap();
    assert!(minpump(&["construct", "binary", "--p1", "1", "--p2", "2", "--p3", "3", "-o", p]).status.success());
    let o = minpump(&["apply", "loopify", p, "--state", "1", "--symbol", "a"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("states: 2"), "{}", stdout(&o));
    assert_eq!(minpump(&["apply", "loopify", p]).status.code(), Some(2));
}

#[test]
fn oracle_agrees_on_example() {
    let o = minpump(&["oracle", EXAMPLE, "--bound", "8"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("oracle mpc 1 mpl 1 mps 1"), "{}", stdout(&o));
}

#[test]
fn search_prints_a_chart() {
    let o = minpump(&["search", "--states", "2", "--alphabet", "2", "--op", "reversal", "--constant", "mps", "--exhaustive"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("instances: 64") && out.contains("violations: 0"), "{out}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(minpump(&["construct", "nope"]).status.code(), Some(2));
    assert_eq!(minpump(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(minpump(&["apply", "union", "a^*"]).status.code(), Some(2));
    assert_eq!(minpump(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(minpump(&["analyze", "(a"]).status.code(), Some(2));
}

#[test]
fn exhausted_budget_exits_one() {
    assert_eq!(minpump(&["--budget", "1", "analyze", "(a^2)^* + (b^3)^*"]).status.code(), Some(1));
}
