use serde_json::{json, Value};
use zetawb::plot::format_sig;
use zetawb::Complex;

/// A JSON number carrying exactly the 12 significant digits of the text
/// output; non-finite values become `null`.
pub fn num(v: f64) -> Value {
    if !v.is_finite() {
        return Value::Null;
    }
    let rounded: f64 = format_sig(v).parse().expect("formatted number parses");
    json!(rounded)
}

pub fn complex(z: Complex) -> Value {
    json!({ "re": num(z.re), "im": num(z.im) })
}

pub fn to_bytes(v: &Value) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(v).expect("values serialize");
    out.push(b'\n');
    out
}
