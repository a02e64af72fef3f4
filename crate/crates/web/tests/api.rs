use chrombound_web::{analyze, bound_scan, family_list};
use serde_json::Value;

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn analyze_family() {
    let a = json(&analyze("f1:4", 5).unwrap());
    assert_eq!(a["n"], 5);
    assert_eq!(a["chromatic_number"], 4);
    assert_eq!(a["equals_bound"], true);
    assert_eq!(a["bound_hypotheses"], true);
    assert_eq!(a["points"][4]["pi"], "72");
    assert_eq!(a["points"].as_array().unwrap().len(), 6);
}

#[test]
fn analyze_graph6() {
    let a = json(&analyze("Bw", 3).unwrap());
    assert_eq!(a["polynomial"], "x^3 - 3x^2 + 2x");
    assert_eq!(a["points"][3]["pi"], "6");
    let c7 = json(&analyze("cycle:7", 3).unwrap());
    assert_eq!(c7["bound_hypotheses"], false);
    assert_eq!(c7["points"][3]["pi"], "126");
}

#[test]
fn analyze_errors() {
    assert!(analyze("nope:3", 4).is_err());
    assert!(analyze("B", 4).is_err());
    assert!(analyze("complete:30", 4).is_err());
    assert!(analyze("Bw", 1000).is_err());
}

#[test]
fn scan_reports() {
    let r = json(&bound_scan(6, 4).unwrap());
    assert_eq!(r["violations"].as_array().unwrap().len(), 0);
    assert_eq!(r["equality_cases"].as_array().unwrap().len(), 3);
    assert!(bound_scan(6, 3).is_err());
    assert!(bound_scan(12, 4).is_err());
}

#[test]
fn families_parse() {
    let list = json(&family_list());
    for f in list.as_array().unwrap() {
        let spec = f["spec"].as_str().unwrap();
        assert!(analyze(spec, 4).is_ok(), "{spec}");
    }
}
