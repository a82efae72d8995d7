use std::path::PathBuf;
use std::process::Command;

use gassner_cli::config::{parse_config_text, Range};
use gassner_cli::{run, CliError, CommandName, Flags, JobConfig};
use jsonschema::JSONSchema;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gassner"))
}

fn gassner(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn schema(name: &str) -> JSONSchema {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schema").join(name);
    let value: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    JSONSchema::compile(&value).unwrap()
}

fn assert_valid(schema: &JSONSchema, doc: &Value) {
    if let Err(errors) = schema.validate(doc) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("schema violations: {msgs:?}\n{doc}");
    }
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = gassner(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn verify_example() {
    let v = json(&["verify", "--n", "3", "--word", "A 1 3"]);
    assert_eq!(v["invariance"], true);
    assert_eq!(v["strands"], 4);
}

#[test]
fn dm_example() {
    let v = json(&["dm", "--d", "18", "--k", "1,1,1,1", "--f", "7"]);
    let r = &v["reports"][0];
    assert_eq!(r["mu"][0], "7/18");
    assert_eq!(r["mu_over_d"], serde_json::json!([7, 7, 7, 7]));
    assert_eq!(r["mu_inf_over_d"], 8);
    assert_eq!(r["mu_inf"], "4/9");
    let pairs = r["pairs"].as_array().unwrap();
    assert!(pairs.iter().any(|p| p["i"] == 1 && p["j"] == 2 && p["value"] == "9/2"));
    assert!(pairs.iter().any(|p| p["j"] == "inf" && p["value"] == "6"));
    let all = json(&["dm", "--d", "18", "--k", "1,1,1,1"]);
    assert_eq!(all["reports"].as_array().unwrap().len(), 6);
}

#[test]
fn classify_example() {
    let v = json(&["classify", "--d", "3", "--n", "6", "--k", "1,1,1,1,1,1,1"]);
    assert_eq!(v["verdict"], "ARITHMETIC_BY_MAIN_THEOREM");
    let w = json(&["classify", "--d", "18", "--k", "1,1,1,1"]);
    assert_eq!(w["verdict"], "NONARITHMETIC_KNOWN_WITNESS");
}

#[test]
fn signature_example() {
    let v = json(&["signature", "--d", "18", "--k", "1,1,1,1", "--f", "7"]);
    assert_eq!((v["signatures"][0]["p"].as_u64(), v["signatures"][0]["q"].as_u64()), (Some(2), Some(1)));
}

#[test]
fn word_grammar() {
    let a = json(&["matrix", "--n", "2", "--word", "s1 s2^-1"]);
    let b = json(&["matrix", "--n", "2", "--word", "[1, -2]"]);
    assert_eq!(a["matrix"], b["matrix"]);
    assert_eq!(a["pure"], false);
    let c = json(&["matrix", "--n", "2", "--word", "A 1 3^2", "--basis", "unreduced"]);
    assert_eq!(c["basis"], "unreduced");
    assert_eq!(c["matrix"].as_array().unwrap().len(), 3);
    let d = json(&["matrix", "--n", "3", "--word", "D 1 4^2"]);
    assert_eq!(d["pure"], true);
    assert_eq!(d["matrix"][0][0], "X1*X2*X3*X4");
}

#[test]
fn every_command_matches_the_schema() {
    let s = schema("report.schema.json");
    let cases: &[&[&str]] = &[
        &["matrix", "--n", "2", "--word", "s1 s2"],
        &["verify", "--n", "2", "--word", "A 1 2"],
        &["form", "--n", "2"],
        &["form", "--n", "2", "--d", "3", "--k", "1,1,2"],
        &["specialize", "--d", "3", "--k", "1,1,2", "--word", "A 1 3"],
        &["spectral", "--d", "3", "--k", "1,1,1,1"],
        &["spectral", "--d", "3", "--k", "1,1,1,1,1,1,1"],
        &["decompose", "--d", "6", "--k", "1,5,5,1"],
        &["dm", "--d", "18", "--k", "1,1,1,1"],
        &["classify", "--d", "5", "--k", "1,2,3,4,1"],
        &["classify", "--d", "18", "--k", "1,1,1,1"],
        &["classify", "--d", "2", "--k", "1,1,1,1,1"],
        &["signature", "--d", "5", "--k", "1,2,3"],
    ];
    for args in cases {
        let doc = json(args);
        assert_eq!(doc["command"], args[0]);
        assert_valid(&s, &doc);
        let again: Value = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(again, doc);
    }
    let bad = serde_json::json!({"command": "verify", "strands": 3});
    assert!(!s.is_valid(&bad));
}

#[test]
fn spectral_flag_uses_the_seed() {
    let v = json(&["spectral", "--d", "3", "--k", "1,1,1,1", "--seed", "4"]);
    assert_eq!(v["flag"]["holds"], true);
    assert_eq!(v["seed"], 4);
    assert_eq!(v["unipotent_found"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(gassner(&["dm", "--d", "4", "--k", "1,2"]).0, 2);
    assert_eq!(gassner(&["dm", "--d", "18", "--k", "1,1,1,1", "--f", "3"]).0, 2);
    assert_eq!(gassner(&["verify", "--n", "2", "--word", "s1"]).0, 2);
    assert_eq!(gassner(&["verify", "--n", "2"]).0, 2);
    assert_eq!(gassner(&["signature", "--d", "3", "--k", "1,1,1"]).0, 2);
    assert_eq!(gassner(&["spectral", "--d", "3..4", "--k", "1,1"]).0, 2);
    assert_eq!(gassner(&["classify", "--bogus"]).0, 2);
    assert_eq!(gassner(&[]).0, 2);
    let (code, _, err) = gassner(&["dm", "--d", "4", "--k", "1,2"]);
    assert_eq!(code, 2);
    assert!(err.contains("not coprime"), "{err}");
    let invariant = CliError::Core(gassner_core::Error::Invariant("x".into()));
    assert_eq!(invariant.exit_code(), 3);
    assert_eq!(CliError::Core(gassner_core::Error::DivisionByZero).exit_code(), 2);
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("job.conf");
    std::fs::write(&path, "# cover\ncommand = classify\nd = 18\nk = 1,1,1,1\n").unwrap();
    let p = path.to_str().unwrap();
    let v = json(&["--config", p]);
    assert_eq!(v["verdict"], "NONARITHMETIC_KNOWN_WITNESS");
    let v = json(&["--config", p, "--d", "3", "--k", "1,1,1,1,1,1,1"]);
    assert_eq!(v["verdict"], "ARITHMETIC_BY_MAIN_THEOREM");
    let v = json(&["decompose", "--config", p]);
    assert_eq!(v["genus"], 25);

    std::fs::write(&path, "colour = blue\n").unwrap();
    assert_eq!(gassner(&["dm", "--config", p]).0, 2);
    assert!(parse_config_text("d = 3..5\nn = 2\nseed = 7\nbasis = unreduced").is_ok());
    assert!(parse_config_text("d 3").is_err());
    assert!(parse_config_text("seed = x").is_err());
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let (code, stdout, _) = gassner(&["decompose", "--d", "4", "--k", "1,1,1", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["genus"], 3);
}

#[test]
fn identical_runs_are_byte_identical() {
    for args in [
        &["spectral", "--d", "5", "--k", "1,2,2,3,1", "--seed", "11"][..],
        &["sweep", "--d", "2..4", "--n", "1..3"][..],
        &["classify", "--d", "6", "--k", "1,1,5,5"][..],
    ] {
        let a = gassner(args);
        let b = gassner(args);
        assert_eq!(a.0, 0);
        assert_eq!(a.1, b.1, "{args:?}");
    }
}

#[test]
fn sweep_small_range() {
    let s = schema("sweep-row.schema.json");
    let (code, out, _) = gassner(&["sweep", "--d", "2..4", "--n", "1..4"]);
    assert_eq!(code, 0);
    let rows: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 4 + 2 * (4 + 8 + 16 + 32));
    let keys: Vec<(u64, u64)> = rows.iter().map(|r| (r["d"].as_u64().unwrap(), r["n"].as_u64().unwrap())).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    for r in &rows {
        assert_valid(&s, r);
        assert_eq!(r["genus_match"], true);
        if r["n"].as_u64().unwrap() >= 2 {
            assert_eq!(r["degeneracy_match"], true, "{r}");
        }
    }
}

#[test]
fn sweep_edge_cases() {
    let (code, out, _) = gassner(&["sweep", "--d", "5..4", "--n", "1..3"]);
    assert_eq!((code, out.as_str()), (0, ""));
    let (code, out, _) = gassner(&["sweep", "--d", "2", "--n", "3..1"]);
    assert_eq!((code, out.as_str()), (0, ""));
    let (code, out, _) = gassner(&["sweep", "--d", "6", "--n", "1..3"]);
    assert_eq!(code, 0);
    let row: Value = out.lines().map(|l| serde_json::from_str::<Value>(l).unwrap()).find(|r| r["k"] == serde_json::json!([1, 5, 5, 1])).unwrap();
    assert_eq!(row["weight_sum"], 12);
    assert!(row["degenerate_divisors"].as_array().unwrap().contains(&Value::from(6)));
    assert_eq!(row["degenerate"], true);
    assert_eq!(gassner(&["sweep", "--d", "2..13", "--n", "1"]).0, 2);
    assert_eq!(gassner(&["sweep", "--d", "2..13", "--n", "1", "--cap", "13"]).0, 0);
    assert_eq!(gassner(&["sweep", "--d", "1..3", "--n", "1"]).0, 2);
}

#[test]
fn library_entry_points() {
    let flags = Flags { command: Some(CommandName::Decompose), d: Some(Range { lo: 3, hi: 3 }), k: Some("1,1,1".into()), ..Flags::default() };
    let job = JobConfig::from_flags(flags).unwrap();
    let text = run(&job).unwrap();
    assert!(text.ends_with('\n'));
    assert_eq!(serde_json::from_str::<Value>(&text).unwrap()["genus"], 1);
    assert_eq!(job.reproducer(), "gassner decompose --d 3 --k 1,1,1");
    assert_eq!("2..=5".parse::<Range>().unwrap(), Range { lo: 2, hi: 5 });
    assert!("a..3".parse::<Range>().is_err());
}
