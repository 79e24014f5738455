//! Browser bindings. Every function returns the same JSON record the CLI prints.

use std::collections::BTreeMap;

use serde_json::Value;
use wasm_bindgen::prelude::*;

use macops::jack::{jack_j, specialize_alpha};
use macops::macdonald::{kostka_matrix_in, macdonald_j_raising, RaisingKind};
use macops::output::{to_json_line, Expansion, KostkaTable};
use macops::partition::Partition;

/// Largest weight the demo will compute.
pub const MAX_WEIGHT: u32 = 6;

fn parse(lambda: &str) -> Result<Partition, String> {
    let l: Partition = lambda.parse().map_err(|e: macops::Error| e.to_string())?;
    if l.weight() > MAX_WEIGHT {
        return Err(format!("weight {} is above the demo limit {MAX_WEIGHT}", l.weight()));
    }
    Ok(l)
}

fn nvars_for(l: &Partition, nvars: u32) -> Result<usize, String> {
    let n = if nvars == 0 { (l.weight() as usize).max(1) } else { nvars as usize };
    if n < l.len() {
        return Err(format!("partition {l} has more than {n} parts"));
    }
    Ok(n)
}

fn params(l: &Partition, n: usize) -> BTreeMap<String, Value> {
    let mut p = BTreeMap::new();
    p.insert("lambda".into(), Value::from(l.parts().to_vec()));
    p.insert("nvars".into(), Value::from(n));
    p
}

/// J_λ(x;q,t) in the monomial basis. `nvars = 0` means |λ|.
pub fn jpoly(lambda: &str, nvars: u32) -> Result<String, String> {
    let l = parse(lambda)?;
    let n = nvars_for(&l, nvars)?;
    let r = macdonald_j_raising(&l, n, RaisingKind::Kminus).map_err(|e| e.to_string())?;
    let e = Expansion::new("jpoly", params(&l, n), &r.j, r.provenance.tag(), None);
    Ok(to_json_line(&e))
}

/// The (q,t)-Kostka table of one degree.
pub fn kostka(degree: u32) -> Result<String, String> {
    if degree == 0 || degree > MAX_WEIGHT {
        return Err(format!("degree must be between 1 and {MAX_WEIGHT}"));
    }
    let k = kostka_matrix_in(degree, degree as usize).map_err(|e| e.to_string())?;
    Ok(to_json_line(&KostkaTable::new(&k, "kostka_big_schur_solve", None)))
}

/// Jack J_λ, symbolic in α when `alpha = 0`.
pub fn jack(lambda: &str, nvars: u32, alpha: u32) -> Result<String, String> {
    let l = parse(lambda)?;
    let n = nvars_for(&l, nvars)?;
    let r = jack_j(&l, n).map_err(|e| e.to_string())?;
    let mut p = params(&l, n);
    let f = if alpha == 0 {
        p.insert("alpha".into(), Value::from("sym"));
        r.j.clone()
    } else {
        p.insert("alpha".into(), Value::from(alpha));
        specialize_alpha(&r.j, alpha as i64)
    };
    Ok(to_json_line(&Expansion::new("jack", p, &f, &r.provenance.tag(), None)))
}

#[wasm_bindgen(js_name = jpoly)]
pub fn jpoly_js(lambda: &str, nvars: u32) -> Result<String, JsValue> {
    jpoly(lambda, nvars).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = kostka)]
pub fn kostka_js(degree: u32) -> Result<String, JsValue> {
    kostka(degree).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = jack)]
pub fn jack_js(lambda: &str, nvars: u32, alpha: u32) -> Result<String, JsValue> {
    jack(lambda, nvars, alpha).map_err(|e| JsValue::from_str(&e))
}
