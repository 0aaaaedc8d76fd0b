//! Report document assembly: deterministic JSON values shared by every
//! subcommand. Keys serialize in sorted order and no volatile data (clocks,
//! paths, hostnames) is ever embedded, so output is byte-stable.

use carpetcalc_core::{CohTriple, Error, Interval, Result, SplitBundle};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::ToPrimitive;
use serde_json::{json, Value};

/// Rendered report in every format the subcommand supports.
pub struct Report {
    pub json: Value,
    pub text: String,
    /// Tab-separated table; only sweeps produce one.
    pub tsv: Option<String>,
}

/// Versioned envelope around a subcommand's results.
pub fn document(name: &str, params: Value, results: Value) -> Value {
    json!({
        "schema_version": "1",
        "command": {"name": name, "params": params},
        "results": results,
    })
}

/// Integers are emitted as JSON numbers; every quantity reachable from the
/// CLI argument ranges fits in 64 bits, so a failure here is an internal bug.
pub fn int(v: &BigInt) -> Result<Value> {
    v.to_i64()
        .map(Value::from)
        .ok_or_else(|| Error::internal(format!("report value exceeds the 64-bit range: {v}")))
}

/// Rationals are emitted as reduced fraction strings ("3", "-5/2").
pub fn rational(q: &BigRational) -> Value {
    Value::String(q.to_string())
}

pub fn interval(iv: &Interval) -> Result<Value> {
    Ok(json!({
        "lo": int(iv.lo())?,
        "hi": int(iv.hi())?,
        "exact": iv.is_exact(),
    }))
}

pub fn triple(t: &CohTriple) -> Result<Value> {
    Ok(json!({
        "h0": int(&t.h0)?,
        "h1": int(&t.h1)?,
        "h2": int(&t.h2)?,
    }))
}

/// Provenance wrapper: `source` records whether the value restates the
/// published reference result for this geometry or was derived here.
pub fn sourced(source: &str, value: Value) -> Value {
    json!({"source": source, "value": value})
}

pub fn bundle(b: &SplitBundle) -> Result<Value> {
    let degrees = b
        .degrees()
        .iter()
        .map(int)
        .collect::<Result<Vec<Value>>>()?;
    Ok(json!({"rank": b.rank(), "degrees": degrees}))
}

/// Text form of a split bundle: "O(10) + O(7)" or "0".
pub fn bundle_text(b: &SplitBundle) -> String {
    if b.is_zero() {
        return "0".to_string();
    }
    b.degrees()
        .iter()
        .map(|d| format!("O({d})"))
        .collect::<Vec<_>>()
        .join(" + ")
}
