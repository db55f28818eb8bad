use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn qmckay(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmckay")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn scratch(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn classical_cartan_of_order_two() {
    let out = qmckay(&["cartan", "cyclic:2", "--spec", "r=1,s=1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["payload"]["specialized"], serde_json::json!([[2, -2], [-2, 2]]));
    assert_eq!(v["status"], "ok");
}

#[test]
fn five_wreath_types() {
    let out = qmckay(&["wreath", "types", "cyclic:2", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["payload"]["count"], 5);
    assert_eq!(v["payload"]["types"].as_array().unwrap().len(), 5);
}

#[test]
fn verify_all_on_order_three() {
    let out = qmckay(&["verify", "all", "--group", "cyclic:3", "--degree", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&out);
    let checks = v["payload"]["checks"].as_array().unwrap();
    assert!(checks.len() >= 10);
    for c in checks {
        assert!(!c["anchor"].as_str().unwrap().is_empty());
        assert_eq!(c["pass"], true);
    }
}

#[test]
fn failed_verification_exits_one_with_a_witness() {
    let out = qmckay(&["verify", "toroidal", "--group", "cyclic:2", "--degree", "2", "--modes", "1", "--no-serre"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["status"], "fail");
    let witness = v["payload"]["checks"][0]["witness"].as_str().unwrap();
    assert!(witness.starts_with("D2"), "{witness}");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["frobnicate"],
        vec!["cartan", "cyclic:0"],
        vec!["cartan", "cyclic:3", "--spec", "r=1"],
        vec!["verify", "toroidal", "--group", "cyclic:3", "--kappa", "2"],
        vec!["verify", "ope", "--group", "cyclic:2", "--kappa"],
        vec!["verify", "ope", "--group", "cyclic:3", "--i", "0", "--j", "7"],
        vec!["wreath", "form", "cyclic:2", "2", "--xi", "nonsense"],
    ] {
        assert_eq!(qmckay(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "ope", "--group", "cyclic:2", "--degree", "2"];
    let a = qmckay(&args);
    let b = qmckay(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = qmckay(&["wreath", "form", "cyclic:3", "3", "--xi", "mckay"]);
    let d = qmckay(&["wreath", "form", "cyclic:3", "3", "--xi", "mckay"]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn pretty_rendering() {
    let out = qmckay(&["cartan", "cyclic:3", "--pretty"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("r^(1/2) s^(-1/2) + r^(-1/2) s^(1/2)"), "{text}");
    assert!(!text.contains("@1"));
}

#[test]
fn dot_output() {
    let out = qmckay(&["graph", "binary_dihedral:2", "--dot"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph binary_dihedral_2 {"));
    assert_eq!(text.matches(" -- ").count(), 4);
}

#[test]
fn builtin_table_validates() {
    let out = qmckay(&["table", "builtin", "binary_dihedral", "3"]);
    let path = scratch("bd3.json");
    std::fs::write(&path, serde_json::to_string(&json(&out)["payload"]).unwrap()).unwrap();
    let out = qmckay(&["table", "validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["payload"]["order"], 12);

    let mut doc = json(&qmckay(&["table", "builtin", "cyclic", "3"]))["payload"].clone();
    doc["characters"][1][1] = "2".into();
    let bad = scratch("bad.json");
    std::fs::write(&bad, doc.to_string()).unwrap();
    let out = qmckay(&["table", "validate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["payload"]["valid"], false);
}

#[test]
fn characteristic_map_of_a_class_indicator() {
    // Indicator of the type ((1), ∅) for ℤ/2 ≀ S_1 maps to a′_{-1}(c_0)/Z = (a_{-1}(γ_0) + a_{-1}(γ_1))/2.
    let input = scratch("indicator.json");
    std::fs::write(&input, r#"[{"type": {"0": [1]}, "value": "1"}]"#).unwrap();
    let out = qmckay(&["ch", "--group", "cyclic:2", "--n", "1", "--input", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let terms = json(&out)["payload"]["vector"].as_array().unwrap().clone();
    assert_eq!(terms.len(), 2);
    for t in terms {
        let c: String = t["coeff"].as_str().unwrap().into();
        assert!(c.starts_with("[1/2]@1"), "{c}");
    }
}

#[test]
fn nondegeneracy_with_seeded_samples() {
    let args = ["verify", "nondegeneracy", "--group", "binary_octahedral", "--random", "3", "--seed", "7"];
    let a = qmckay(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, qmckay(&args).stdout);
    let samples = json(&a)["payload"]["checks"][0]["params"]["t"].as_array().unwrap().len();
    assert_eq!(samples, 6);
}
