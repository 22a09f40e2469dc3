//! Golden-file tests for the command line: exact output, exit codes, and
//! re-parsing of every printed element.

use std::path::PathBuf;
use std::process::Command;

use cubesum::cli::run;
use cubesum::KElement;
use serde_json::Value;

const CASES: &[(&str, &[&str], i32)] = &[
    ("classify_21_q.json", &["classify", "21", "--scope", "Q", "--json"], 0),
    ("classify_21_q.txt", &["classify", "21", "--scope", "Q"], 0),
    ("classify_1_9w_k.json", &["classify", "1+9*w", "--scope", "K", "--json"], 0),
    ("classify_183_q.json", &["classify", "183", "--scope", "Q", "--json"], 0),
    ("classify_18w_k.json", &["classify", "18*w", "--scope", "K", "--json"], 0),
    ("classify_2_q.json", &["classify", "2", "--scope", "Q", "--json"], 0),
    ("factor_18w.json", &["factor", "18*w", "--json"], 0),
    ("split_prime_7.json", &["split-prime", "7", "--json"], 0),
    ("report_61.json", &["report", "61", "--json"], 0),
    ("solve_183_lucas.json", &["solve", "183", "--method", "lucas", "--json"], 0),
    ("descend_2_1_9.jsonl", &["descend", "2", "1", "9", "--json"], 0),
    ("search_7_q.json", &["search", "7", "--scope", "Q", "--budget-denom", "5", "--json"], 0),
    ("tables_conditionI_73.json", &["tables", "conditionI", "--max", "73", "--json"], 0),
    ("tables_conditionI_73.txt", &["tables", "conditionI", "--max", "73"], 0),
    ("tables_excA_200.json", &["tables", "excA", "--max", "200", "--json"], 0),
    ("tables_excB_100.json", &["tables", "excB", "--max", "100", "--json"], 0),
    ("tables_excA_mod9_first5.json", &["tables", "excA-mod9-first5", "--json"], 0),
];

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn cli(args: &[&str]) -> cubesum::cli::Outcome {
    run(std::iter::once("cubesum").chain(args.iter().copied()))
}

#[test]
fn outputs_match_golden_files() {
    for (name, args, code) in CASES {
        let want = std::fs::read_to_string(golden_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
        let out = cli(args);
        assert_eq!(out.code, *code, "{name}: {}", out.stderr);
        assert_eq!(out.stdout, want, "{name}");
    }
}

fn strings(v: &Value, out: &mut Vec<String>) {
    match v {
        Value::String(s) => out.push(s.clone()),
        Value::Array(xs) => xs.iter().for_each(|x| strings(x, out)),
        Value::Object(m) => m.values().for_each(|x| strings(x, out)),
        _ => {}
    }
}

#[test]
fn printed_elements_reparse() {
    let mut checked = 0;
    for (name, args, _) in CASES.iter().filter(|c| c.0.ends_with(".json")) {
        let out = cli(args);
        let v: Value = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{name}: {e}"));
        let mut all = Vec::new();
        strings(&v, &mut all);
        for s in all {
            // only element-valued fields parse; prose fields do not
            if let Ok(x) = s.parse::<KElement>() {
                assert_eq!(x.to_string(), s, "{name}");
                checked += 1;
            }
        }
    }
    assert!(checked > 20);
}

#[test]
fn verdict_schema_is_stable() {
    let out = cli(&["classify", "183", "--scope", "Q", "--json"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    for key in ["input", "scope", "canonical", "status", "rule", "witness"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["canonical"]["unit"], "1");
    assert_eq!(v["canonical"]["factors"][0], serde_json::json!(["1+2*w", 2]));
}

fn binary(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cubesum"));
    cmd.args(args).env_remove("CUBESUM_BUDGET_DENOM");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn binary_exit_codes() {
    let (code, stdout, _) = binary(&["classify", "21", "--scope", "Q"], &[]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("NoSolutions [Theorem 2.3] p=7"));

    // 6 has a witness at denominator 21, outside this budget
    let (code, stdout, _) = binary(&["classify", "6", "--scope", "Q", "--budget-lucas", "1"], &[("CUBESUM_BUDGET_DENOM", "10")]);
    assert_eq!(code, 2, "{stdout}");
    assert!(stdout.starts_with("Unknown"));
    let (code, stdout, _) = binary(&["classify", "6", "--scope", "Q"], &[("CUBESUM_BUDGET_DENOM", "25")]);
    assert_eq!(code, 0);
    assert!(stdout.contains("37/21"));

    let (code, _, stderr) = binary(&["factor", "1+2*q"], &[]);
    assert_eq!(code, 1);
    assert_eq!(stderr.trim_end().lines().count(), 1);
    assert!(stderr.contains("2*q"), "{stderr}");

    let (code, _, stderr) = binary(&["classify", "w", "--scope", "Q"], &[]);
    assert_eq!(code, 1);
    assert!(stderr.contains("rational"));

    let (code, _, _) = binary(&["verify", "sometimes"], &[]);
    assert_eq!(code, 1);
}

#[test]
fn corrupted_fixture_fails_verify() {
    let mut fixture: Value = serde_json::to_value(cubesum::tables::ExpectedTables::default()).unwrap();
    fixture["exc_a_mod9_first5"][0] = Value::from(79);
    let path = std::env::temp_dir().join(format!("cubesum-fixture-{}.json", std::process::id()));
    std::fs::write(&path, fixture.to_string()).unwrap();
    let (code, stdout, _) = binary(&["verify", "quick", "--fixture", path.to_str().unwrap()], &[]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 1);
    assert!(stdout.contains("criterion  5 FAIL"), "{stdout}");
    assert!(stdout.contains("failed criteria 5"));
}

#[test]
fn tables_diff_on_mismatch() {
    let mut fixture: Value = serde_json::to_value(cubesum::tables::ExpectedTables::default()).unwrap();
    fixture["exc_b"] = serde_json::json!([61, 67]);
    let path = std::env::temp_dir().join(format!("cubesum-tables-{}.json", std::process::id()));
    std::fs::write(&path, fixture.to_string()).unwrap();
    let (code, _, stderr) = binary(&["tables", "excB", "--fixture", path.to_str().unwrap()], &[]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 1);
    assert!(stderr.contains("excB: got [61, 67, 73], expected [61, 67]"), "{stderr}");
}
