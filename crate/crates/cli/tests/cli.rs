use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").canonicalize().unwrap()
}

fn fixture(name: &str) -> String {
    root().join("fixtures").join(name).to_string_lossy().into_owned()
}

fn forge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blueprint-forge")).args(args).env_remove("BLUEPRINT_FORGE_JOBS").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Compares against `tests/golden/<name>`; `UPDATE_GOLDEN=1` rewrites the file.
fn golden(name: &str, actual: &str) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(actual, expected, "text output drifted from {name}");
}

fn validator(report: bool) -> jsonschema::Validator {
    let load = |f: &str| serde_json::from_str::<Value>(&std::fs::read_to_string(root().join("docs/schemas").join(f)).unwrap()).unwrap();
    let family = load("family.v1.schema.json");
    if !report {
        return jsonschema::validator_for(&family).unwrap();
    }
    let id = family["$id"].as_str().unwrap().to_owned();
    jsonschema::options().with_resource(id, jsonschema::Resource::from_contents(family).unwrap()).build(&load("report.v1.schema.json")).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(forge(&["verify", "--family", &fixture("tits_k1.json"), "--depth", "8", "--all"]).status.code(), Some(0));
    let broken = forge(&["verify", "--family", &fixture("broken_cb2.json")]);
    assert_eq!(broken.status.code(), Some(1));
    assert!(stdout(&broken).contains("w = rsrs"));
    assert_eq!(forge(&["verify", "--family", "/nonexistent/family.json"]).status.code(), Some(2));
    assert_eq!(forge(&["verify", "--family", &fixture("tits_k1.json"), "--bogus"]).status.code(), Some(2));
    assert_eq!(forge(&["verify", "--family", &fixture("tits_k1.json"), "--prop52"]).status.code(), Some(2), "prop52 needs a quad family");
    assert_eq!(forge(&["verify", "--family", &fixture("tits_k1.json"), "--jobs", "0"]).status.code(), Some(2));
}

#[test]
fn malformed_documents_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("not_json.json", "{ variant: tits"),
        ("unknown_field.json", r#"{"variant":"tits","s":"s","t":"t","K":[1],"colour":"red"}"#),
        ("missing_field.json", r#"{"variant":"exotic","s0":"s"}"#),
        ("wrong_variant_field.json", r#"{"variant":"exotic","s0":"s","s1":"t","K":[1]}"#),
        ("bad_generator.json", r#"{"variant":"tits","s":"s","t":"x","K":[1]}"#),
    ];
    for (name, text) in cases {
        let path = dir.path().join(name);
        std::fs::write(&path, text).unwrap();
        let o = forge(&["verify", "--family", path.to_str().unwrap(), "--depth", "1"]);
        assert_eq!(o.status.code(), Some(2), "{name}");
        assert!(o.stdout.is_empty(), "{name}: nothing is printed before validation");
    }
}

#[test]
fn shipped_fixtures_match_the_family_schema() {
    let v = validator(false);
    for entry in std::fs::read_dir(root().join("fixtures")).unwrap() {
        let path = entry.unwrap().path();
        if path.file_name().unwrap() == "expectations.json" {
            continue;
        }
        let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert!(v.is_valid(&doc), "{}", path.display());
    }
}

#[test]
fn json_reports_are_schema_valid_and_written_to_output() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = forge(&["verify", "--family", &fixture("broken_weyl.json"), "--depth", "4", "--format", "json", "--output", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let v = validator(true);
    assert!(v.is_valid(&report));
    assert_eq!(report["checks"].as_array().unwrap().iter().filter(|c| c["status"] == "fail").count(), 1);

    let quad = forge(&["verify", "--family", &fixture("quad_k3.json"), "--depth", "3", "--format", "json"]);
    assert_eq!(quad.status.code(), Some(0));
    let report: Value = serde_json::from_str(&stdout(&quad)).unwrap();
    assert!(v.is_valid(&report));
    assert_eq!(report["sphere_sizes"], serde_json::json!([1, 3, 6, 12]));
}

#[test]
fn jobs_flag_and_environment_agree() {
    let args = ["verify", "--family", &fixture("exotic.json"), "--depth", "5"];
    let flag = forge(&[&args[..], &["--jobs", "1"]].concat());
    let env = Command::new(env!("CARGO_BIN_EXE_blueprint-forge")).args(args).env("BLUEPRINT_FORGE_JOBS", "3").output().unwrap();
    assert_eq!(stdout(&flag), stdout(&env));
    let bad = Command::new(env!("CARGO_BIN_EXE_blueprint-forge")).args(args).env("BLUEPRINT_FORGE_JOBS", "many").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn golden_verify_text() {
    golden("verify_tits_k1_depth4.txt", &stdout(&forge(&["verify", "--family", &fixture("tits_k1.json"), "--depth", "4"])));
    golden("verify_broken_cb1_depth4.txt", &stdout(&forge(&["verify", "--family", &fixture("broken_cb1.json"), "--depth", "4", "--cb1"])));
}

#[test]
fn golden_group_text() {
    golden("group_quad_stst.txt", &stdout(&forge(&["group", "--family", &fixture("quad_k3.json"), "--word", "stst"])));
}

#[test]
fn golden_gallery_text() {
    let o = forge(&["gallery", "--family", &fixture("nil_n5.json"), "--nil-pattern", "2,3,3,5"]);
    golden("gallery_nil_2335.txt", &stdout(&o));
}

#[test]
fn group_reports_order_and_class() {
    let json = |args: &[&str]| -> Value {
        let o = forge(&[args, &["--format", "json"]].concat());
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        serde_json::from_str(&stdout(&o)).unwrap()
    };
    let stst = json(&["group", "--family", &fixture("quad_k3.json"), "--word", "stst"]);
    assert_eq!((stst["order_exponent"].as_u64(), stst["class"].as_u64()), (Some(4), Some(2)));
    let abelian = json(&["group", "--family", &fixture("tits_k1.json"), "--word", "st"]);
    assert_eq!(abelian["class"], 1);
    let nil = json(&["group", "--family", &fixture("nil_n4.json"), "--nil-pattern", "1,2,3,4"]);
    assert_eq!((nil["order_exponent"].as_u64(), nil["class"].as_u64()), (Some(44), Some(3)));
    let reducible = forge(&["group", "--family", &fixture("tits_k1.json"), "--word", "ss"]);
    assert_eq!(reducible.status.code(), Some(2));
}

#[test]
fn group_extension_failure_exits_one() {
    let o = forge(&["group", "--family", &fixture("broken_cb3.json"), "--word", "stst", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["extension_failure"]["step"].as_u64().is_some());
}

#[test]
fn gallery_detection_examples() {
    let json = |args: &[&str]| -> Value { serde_json::from_str(&stdout(&forge(&[args, &["--format", "json"]].concat()))).unwrap() };
    let g = json(&["gallery", "--family", &fixture("nil_n5.json"), "--nil-pattern", "2,3,3,5"]);
    let crossings: Vec<u64> = g["detection"]["labels"].as_array().unwrap().iter().map(|l| l["crossing"].as_u64().unwrap()).collect();
    assert_eq!(crossings, [1, 10, 19, 29, 40, 50, 61]);
    assert_eq!(g["m_set"], serde_json::json!([50]));
    let n4 = json(&["gallery", "--family", &fixture("nil_n4.json"), "--nil-pattern", "2,3,3,5"]);
    assert_eq!(n4["m_set"], serde_json::json!([]));
    let short = json(&["gallery", "--family", &fixture("nil_n4.json"), "--word", "sts"]);
    assert!(short["detection"]["match"].is_null());
    assert_eq!(short["m_set"], serde_json::json!([]));
    let p1234 = json(&["gallery", "--family", &fixture("nil_n4.json"), "--nil-pattern", "1,2,3,4"]);
    assert_eq!(p1234["detection"]["parameters"], serde_json::json!([1, 2, 3, 4]));
    assert_eq!(p1234["m_set"], serde_json::json!([]));

    let tits = json(&["gallery", "--family", &fixture("tits_k1.json"), "--word", "sts"]);
    assert_eq!(tits["detection"]["k"], 1);
    assert_eq!(tits["m_set"], serde_json::json!([2]));
    let dihedral = json(&["gallery", "--family", &fixture("quad_k3.json"), "--word", "rsrs"]);
    assert_eq!(dihedral["detection"]["open_interval"], serde_json::json!([2, 3]));
}

#[test]
fn reproduce_subcommand() {
    let o = forge(&["reproduce", "--family", &fixture("nil_n3.json"), "--statement", "nil-sharp"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2^16, class 2"));
    let tiny = forge(&["reproduce", "--family", &fixture("nil_n4.json"), "--statement", "nil-sharp", "--cap", "4"]);
    assert_eq!(tiny.status.code(), Some(0), "truncation is reported, not failed");
    assert!(stdout(&tiny).contains("TRUNCATED"));
    let mismatch = forge(&["reproduce", "--family", &fixture("tits_k1.json"), "--statement", "nil-unbounded", "--m", "3"]);
    assert_eq!(mismatch.status.code(), Some(2));
}
