use serde_json::Value;

#[test]
fn jpoly_record() {
    let v: Value = serde_json::from_str(&macops_wasm::jpoly("1,1", 2).unwrap()).unwrap();
    assert_eq!(v["coeffs"][0]["value"], "1 - t - t^2 + t^3");
}

#[test]
fn kostka_record() {
    let v: Value = serde_json::from_str(&macops_wasm::kostka(2).unwrap()).unwrap();
    assert_eq!(v["entries"], serde_json::json!([["1", "t"], ["q", "1"]]));
}

#[test]
fn jack_record() {
    let v: Value = serde_json::from_str(&macops_wasm::jack("2", 2, 0).unwrap()).unwrap();
    assert_eq!(v["coeffs"][0]["value"], "1 + a");
    let v: Value = serde_json::from_str(&macops_wasm::jack("2", 2, 2).unwrap()).unwrap();
    assert_eq!(v["coeffs"][0]["value"], "3");
}

#[test]
fn rejects_bad_input() {
    assert!(macops_wasm::jpoly("1,2", 0).is_err());
    assert!(macops_wasm::jpoly("7", 0).is_err());
    assert!(macops_wasm::kostka(0).is_err());
    assert!(macops_wasm::jack("1,1,1", 2, 1).is_err());
}
