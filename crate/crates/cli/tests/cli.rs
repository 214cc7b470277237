use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_wangcheck"))
}

fn catalog_file(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/catalog")
        .join(name)
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn validate_accepts_and_rejects() {
    let good = catalog_file("commuting_t4xt4.json");
    let out = run(&["validate", good.to_str().unwrap(), "--json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["violations"], Value::Array(vec![]));

    // self-paired squares pass by default and fail under --strict
    let paired = catalog_file("survey_t4xt4_b.json");
    assert_eq!(code(&run(&["validate", paired.to_str().unwrap()])), 0);
    let out = run(&["validate", paired.to_str().unwrap(), "--strict", "--json"]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["violations"][0]["kind"], "self_paired_square");
}

#[test]
fn incomplete_datum_exits_one() {
    let text = r#"{"n": 2, "m": 2, "h_involution": [[0, 1]], "v_involution": [[0, 1]],
        "squares": [[0, 0, 0, 0]], "oriented": true}"#;
    let path = scratch("incomplete.json", text);
    let out = run(&["validate", path.to_str().unwrap(), "--json"]);
    assert_eq!(code(&out), 1);
    let kinds: Vec<String> = json(&out)["violations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["kind"].as_str().unwrap().to_string())
        .collect();
    assert!(kinds.contains(&"missing_pair".to_string()), "{kinds:?}");
}

#[test]
fn parse_and_usage_errors_exit_two() {
    let garbage = scratch("garbage.json", "{ not json");
    let out = run(&["validate", garbage.to_str().unwrap(), "--json"]);
    assert_eq!(code(&out), 2);
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(err["message"].as_str().is_some());

    assert_eq!(code(&run(&["validate", "/nonexistent/datum.json"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["bound", "--ratio", "1/3"])), 2);
    assert_eq!(code(&run(&["analyze", "--catalog", "no_such_entry"])), 2);
    // empty slots are reported, not guessed
    let out = run(&["analyze", "--catalog", "a6_s5_squares", "--json"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("empty slot"));
}

#[test]
fn short_tower_is_a_usage_error() {
    let out = run(&["analyze", "--catalog", "commuting_t4xt4", "--depth", "1"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn word_bound_exceeded_exits_three() {
    // 4 * 3^14 words on the sphere of radius 15
    let out = run(&[
        "tower",
        "--catalog",
        "commuting_t4xt4",
        "--depth",
        "15",
        "--json",
    ]);
    assert_eq!(code(&out), 3);
}

#[test]
fn enum_cap_exceeded_exits_three() {
    let a6 = catalog_file("a6_natural.json");
    let out = run(&[
        "analyze",
        "--pair",
        a6.to_str().unwrap(),
        a6.to_str().unwrap(),
        "--enum-cap",
        "100",
    ]);
    assert_eq!(code(&out), 3);
}

#[test]
fn tower_json_shape() {
    let out = run(&[
        "tower",
        "--catalog",
        "survey_t4xt4_b",
        "--side",
        "v",
        "--json",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["side"], "vertical");
    assert_eq!(v["orders"], serde_json::json!([24, 24, 24, 24, 24]));
    assert_eq!(
        v["verdict"],
        serde_json::json!({"kind": "discrete", "at": 1})
    );
}

#[test]
fn huge_orders_stay_exact_in_json() {
    let out = run(&["tower", "--catalog", "survey_t4xt4_c", "--json"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("862021093144465424779397281923627391609032"));
}

#[test]
fn bound_json() {
    let out = run(&["bound", "--ratio", "13/2", "--json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out), serde_json::json!({"N": 6, "index_bound": 120}));
}

#[test]
fn datum_analysis_text_and_json() {
    let path = catalog_file("survey_t4xt4_a.json");
    let out = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(!out.stdout.is_empty());
    let out = run(&["analyze", path.to_str().unwrap(), "--json"]);
    let v = json(&out);
    assert_eq!(v["theorem01"]["applicable"], false);
    assert_eq!(v["side1"]["discreteness"]["kind"], "no_stabilization");
}

#[test]
fn constant_type_can_be_withdrawn() {
    let a6 = catalog_file("a6_natural.json");
    let s5 = catalog_file("s5_on_pairs.json");
    let out = run(&[
        "analyze",
        "--pair",
        a6.to_str().unwrap(),
        s5.to_str().unwrap(),
        "--constant-type",
        "false",
        "--json",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["theorem01"]["applicable"], false);
}

#[test]
fn catalog_listing() {
    let out = run(&["catalog", "list", "--json"]);
    assert_eq!(code(&out), 0);
    let names: Vec<String> = json(&out)
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["name"].as_str().unwrap().to_string())
        .collect();
    for want in ["commuting_t4xt4", "a6_s5", "m12", "a6_m12_squares"] {
        assert!(names.iter().any(|n| n == want), "{want} missing");
    }
    let out = run(&["catalog", "show", "a6_s5"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("s5_on_pairs"));
    assert_eq!(code(&run(&["catalog", "show", "nope"])), 2);
}
