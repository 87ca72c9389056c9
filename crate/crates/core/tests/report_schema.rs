//! Reports must match the JSON schema shipped in `docs/`.
//!
//! The checker below covers the subset of JSON Schema the document uses:
//! `type`, `required`, `properties`, `additionalProperties: false`,
//! `items`, `enum` and local `$ref`.

use serde_json::Value;
use steiner_ecc::census::{verify, verify_random, Claim, RandomUniverse, VerificationReport, DEFAULT_CAP};

fn schema() -> Value {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/report-schema.json");
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn type_matches(name: &str, v: &Value) -> bool {
    match name {
        "object" => v.is_object(),
        "array" => v.is_array(),
        "string" => v.is_string(),
        "integer" => v.is_u64() || v.is_i64(),
        "boolean" => v.is_boolean(),
        "null" => v.is_null(),
        other => panic!("schema uses unsupported type {other}"),
    }
}

fn check(root: &Value, node: &Value, v: &Value, at: &str) {
    if let Some(r) = node.get("$ref").and_then(Value::as_str) {
        let name = r.strip_prefix("#/$defs/").expect("local ref");
        return check(root, &root["$defs"][name], v, at);
    }
    if let Some(t) = node.get("type") {
        let ok = match t {
            Value::String(s) => type_matches(s, v),
            Value::Array(ts) => ts.iter().any(|t| type_matches(t.as_str().unwrap(), v)),
            _ => panic!("bad type at {at}"),
        };
        assert!(ok, "{at}: {v} does not have type {t}");
    }
    if let Some(allowed) = node.get("enum").and_then(Value::as_array) {
        assert!(allowed.contains(v), "{at}: {v} not in {allowed:?}");
    }
    if let (Some(obj), Some(props)) = (v.as_object(), node.get("properties").and_then(Value::as_object)) {
        for req in node.get("required").and_then(Value::as_array).into_iter().flatten() {
            let req = req.as_str().unwrap();
            assert!(obj.contains_key(req), "{at}: missing {req}");
        }
        for (key, val) in obj {
            match props.get(key) {
                Some(sub) => check(root, sub, val, &format!("{at}.{key}")),
                None => assert!(
                    node.get("additionalProperties") != Some(&Value::Bool(false)),
                    "{at}: unexpected field {key}"
                ),
            }
        }
    }
    if let (Some(items), Some(arr)) = (node.get("items"), v.as_array()) {
        for (i, x) in arr.iter().enumerate() {
            check(root, items, x, &format!("{at}[{i}]"));
        }
    }
}

fn assert_valid(rep: &VerificationReport) {
    let root = schema();
    let v: Value = serde_json::from_str(&rep.to_json()).unwrap();
    check(&root, &root, &v, rep.claim.as_str());
}

#[test]
fn every_claim_matches_the_schema() {
    for claim in Claim::ALL {
        for n in [2, 7] {
            assert_valid(&verify(claim, n, DEFAULT_CAP).unwrap());
        }
    }
}

#[test]
fn random_universe_report_matches_the_schema() {
    let u = RandomUniverse { count: 10, max_order: 12, ..Default::default() };
    assert_valid(&verify_random(Claim::PiDoesNotIncrease, &u).unwrap());
}

#[test]
fn reports_round_trip_through_json() {
    let rep = verify(Claim::SegmentCountMin, 9, DEFAULT_CAP).unwrap();
    let back: VerificationReport = serde_json::from_str(&rep.to_json()).unwrap();
    assert_eq!(back, rep);
    assert!(!rep.findings.is_empty(), "ties at n = 9 are reported");
}

#[test]
fn csv_summary_has_one_row_per_class() {
    let rep = verify(Claim::DegreeSequenceMax, 7, DEFAULT_CAP).unwrap();
    let csv = rep.to_csv();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("claim,n,key,value,class_size,status"));
    assert_eq!(lines.count(), rep.classes.len());
    assert!(csv.contains("\"(3,3,2,1,1,1,1)\",32/7,2,pass"));
}
