use egyptpoly_web::{decide_json, family_json, scan_json};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn decide_matches_golden_instance() {
    let v = parse(&decide_json("5", "7", "9").unwrap());
    assert_eq!(v["status"], "solvable");
    assert_eq!(v["solutions"][0]["y"], serde_json::json!(["7", "16", "9"]));
}

#[test]
fn bad_input_is_an_error_string() {
    assert!(decide_json("5", "seven", "9").unwrap_err().contains("n0"));
    assert!(decide_json("5", "3", "10").unwrap_err().contains("gcd"));
    assert!(scan_json("5", "100000").unwrap_err().contains("at most"));
    assert!(family_json("5", "7", "9", "1", "1", "1", "plus").is_err());
    assert!(family_json("5", "7", "9", "14", "7", "2", "sideways").is_err());
}

#[test]
fn scan_lists_admissible_residues() {
    let v = parse(&scan_json("5", "9").unwrap());
    assert_eq!(v["summary"]["admissible"], serde_json::json!(["4", "7", "8"]));
}

#[test]
fn family_explorer_reports_both_branches() {
    let plus = parse(&family_json("5", "7", "9", "14", "7", "2", "plus").unwrap());
    assert_eq!(plus["identity"], true);
    assert_eq!(plus["integral"], true);
    let minus = parse(&family_json("5", "7", "9", "14", "7", "2", "minus").unwrap());
    assert_eq!(minus["identity"], true);
    assert_eq!(minus["integral"], false);
    assert_eq!(minus["discriminant"]["lhs"], "-140");
}
