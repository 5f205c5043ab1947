//! Browser bindings. Every export takes and returns plain strings (JSON on
//! the way out) so the same functions run natively in tests.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use pnsym_core::checker;
use pnsym_core::pnsym::parse_element;
use pnsym_core::Error;

fn error_json(e: &Error) -> Value {
    match e {
        Error::Parse { pos, msg } => json!({ "error": msg, "pos": pos }),
        other => json!({ "error": other.to_string() }),
    }
}

/// Internal product of two elements, e.g. `F((1,1);[2,1])`.
#[wasm_bindgen]
pub fn internal_product(a: &str, b: &str) -> String {
    let run = || -> Result<Value, (usize, Error)> {
        let x = parse_element(a).map_err(|e| (0, e))?;
        let y = parse_element(b).map_err(|e| (1, e))?;
        let p = x.internal_mul(&y);
        Ok(json!({ "result": p.to_string(), "terms": p.len() }))
    };
    match run() {
        Ok(v) => v.to_string(),
        Err((which, e)) => {
            let mut v = error_json(&e);
            v["argument"] = json!(which);
            v.to_string()
        }
    }
}

/// Checks an operator identity on one degree.
#[wasm_bindgen]
pub fn check_identity(expr: &str, degree: u32) -> String {
    let e = match checker::parse(expr) {
        Ok(e) => e,
        Err(err) => return error_json(&err).to_string(),
    };
    let verdict = checker::check_zero_on_degree(&e, degree as usize);
    json!({ "expr": e.to_string(), "holds": verdict.holds(), "verdict": verdict.to_string() }).to_string()
}

/// Smallest `k ≤ k_max` with `(F_{(i,j),id} − F_{(j,i),id})^{∗k} = 0`, and the
/// number of terms in each power along the way.
#[wasm_bindgen]
pub fn k_value(i: u32, j: u32, k_max: u32) -> String {
    let mut sizes = Vec::new();
    let k = checker::k_value_with(i, j, k_max, |_, n| sizes.push(n));
    json!({ "i": i, "j": j, "k": k, "terms": sizes }).to_string()
}
