mod common;

use std::fs;

use common::{crate_dir, squeeze, stdout, vres};
use serde_json::Value;

const POINTS: &str = "data/three_points.json";

fn schema_check(schema: &str, doc: &Value) {
    let text = fs::read_to_string(crate_dir().join("schemas").join(schema)).unwrap();
    let schema: Value = serde_json::from_str(&text).unwrap();
    let v = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = v.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{schema}: {errors:?}");
}

fn json_of(args: &[&str]) -> Value {
    let out = vres(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).unwrap()
}

fn golden(name: &str) -> String {
    fs::read_to_string(crate_dir().join("tests/golden").join(name)).unwrap()
}

#[test]
fn data_files_match_the_problem_schema() {
    for entry in fs::read_dir(crate_dir().join("data")).unwrap() {
        let text = fs::read_to_string(entry.unwrap().path()).unwrap();
        schema_check("problem.schema.json", &serde_json::from_str(&text).unwrap());
    }
}

#[test]
fn betti_table() {
    let out = vres(&["betti", "--input", POINTS]);
    assert!(out.status.success());
    assert_eq!(squeeze(&stdout(&out)), squeeze(&golden("o7.txt")));
    schema_check("betti.schema.json", &json_of(&["betti", "--input", POINTS, "--output", "json"]));
}

#[test]
fn resolve_json() {
    let v = json_of(&["resolve", "--input", POINTS, "--output", "json"]);
    schema_check("complex.schema.json", &v);
    assert_eq!(v["ranks"], serde_json::json!([1, 5, 6, 2]));
}

#[test]
fn virtual_of_pair_then_is_virtual() {
    let out = vres(&["virtual-of-pair", "--bounds", "3,1", "--input", POINTS]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("S^1 <-- S^3 <-- S^2 <-- 0"));
    assert!(squeeze(&text).ends_with(&squeeze(&golden("o10.txt"))));

    let dir = std::env::temp_dir().join(format!("vres-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    for from_resolution in [false, true] {
        let mut args = vec!["virtual-of-pair", "--bounds", "3,1", "--input", POINTS, "--output", "json"];
        if from_resolution {
            args.push("--from-resolution");
        }
        let v = json_of(&args);
        schema_check("complex.schema.json", &v);
        let path = dir.join(format!("pair-{from_resolution}.json"));
        fs::write(&path, v.to_string()).unwrap();
        let p = path.to_str().unwrap();
        for strategy in ["homology", "determinantal"] {
            let report = json_of(&["is-virtual", "--complex", p, "--strategy", strategy, "--output", "json"]);
            schema_check("report.schema.json", &report);
            assert_eq!(report["verdict"], Value::Bool(true), "{strategy}");
            assert_eq!(report["strategy"], Value::String(strategy.into()));
        }
        let report = json_of(&["is-virtual", "--complex", p, "--input", POINTS, "--output", "json"]);
        assert_eq!(report["h0_matches_expected"], Value::Bool(true));
    }
}

#[test]
fn regularity_of_three_points() {
    let v = json_of(&["regularity", "--input", POINTS, "--output", "json"]);
    schema_check("regularity.schema.json", &v);
    assert_eq!(v["minimal_elements"], serde_json::json!([[0, 2], [1, 1], [2, 0]]));
    let out = vres(&["regularity", "--input", POINTS]);
    assert_eq!(stdout(&out).trim(), "(0,2) (1,1) (2,0)");
}

#[test]
fn fat_point_and_dim() {
    let out = vres(&["fat-point", "--a", "2,0", "--input", POINTS]);
    assert!(squeeze(&stdout(&out)).ends_with(&squeeze(&golden("o14.txt"))));
    let v = json_of(&["dim", "--input", POINTS, "--output", "json"]);
    schema_check("dim.schema.json", &v);
    assert_eq!(v["dim"], 2);
}

#[test]
fn saturate_is_idempotent_on_saturated_input() {
    let v = json_of(&["saturate", "--input", POINTS, "--output", "json"]);
    schema_check("problem.schema.json", &v);
    assert_eq!(v["ideal"].as_array().unwrap().len(), 5);
}

#[test]
fn curves() {
    let out = vres(&["curve-from-p3", "--sample", "twisted-cubic", "--char", "101"]);
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(
        lines,
        ["x_(1,1)^2-x_(1,0)*x_(1,2)", "x_(0,1)*x_(1,1)-x_(0,0)*x_(1,2)", "x_(0,1)*x_(1,0)-x_(0,0)*x_(1,1)"]
    );
    let out = vres(&["curve-from-p3", "--sample", "twisted-cubic", "--preserve-degree"]);
    assert_eq!(out.status.code(), Some(2));

    let a = json_of(&["random-rational-curve", "2", "3", "--seed", "9", "--output", "json"]);
    let b = json_of(&["random-rational-curve", "2", "3", "--seed", "9", "--output", "json"]);
    schema_check("problem.schema.json", &a);
    assert_eq!(a, b);
    let m = json_of(&["random-monomial-curve", "1", "2", "--seed", "1", "--char", "101", "--output", "json"]);
    assert_eq!(m["factors"], serde_json::json!([1, 2]));
    assert_eq!(vres(&["random-monomial-curve", "1", "1"]).status.code(), Some(2));
}

#[test]
fn space_curve_from_file() {
    let dir = std::env::temp_dir().join(format!("vres-cli-file-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join("line.json");
    fs::write(&path, r#"{"factors": [3], "ideal": ["x_(0,2)", "x_(0,3)"]}"#).unwrap();
    let v = json_of(&["curve-from-p3", "--ideal-file", path.to_str().unwrap(), "--output", "json"]);
    schema_check("problem.schema.json", &v);
}

#[test]
fn exit_codes() {
    assert_eq!(vres(&["dim", "--input", "data/missing.json"]).status.code(), Some(2));
    assert_eq!(vres(&["dim"]).status.code(), Some(2));
    assert_eq!(vres(&["virtual-of-pair", "--bounds", "3,x", "--input", POINTS]).status.code(), Some(2));

    let dir = std::env::temp_dir().join(format!("vres-cli-exit-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    fs::write(&bad, r#"{"factors": [1, 1], "ideal": ["x_(9,9)"]}"#).unwrap();
    assert_eq!(vres(&["dim", "--input", bad.to_str().unwrap()]).status.code(), Some(2));
    let nonhomog = dir.join("nonhomog.json");
    fs::write(&nonhomog, r#"{"factors": [1, 1], "ideal": ["x_(0,0)+x_(1,0)^2"]}"#).unwrap();
    assert_eq!(vres(&["dim", "--input", nonhomog.to_str().unwrap()]).status.code(), Some(2));

    // t_max below the window is a usage error, a too small t_max fails to stabilize
    assert_eq!(vres(&["regularity", "--input", POINTS, "--t-max", "1"]).status.code(), Some(2));
    let out = vres(&["regularity", "--input", POINTS, "--window", "3", "--t-max", "3"]);
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
}
