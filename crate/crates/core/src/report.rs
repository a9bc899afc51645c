//! Machine-readable output. `serde_json` maps keep keys sorted, so equal
//! inputs serialize to identical bytes.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::classify::ClassificationResult;
use crate::homology::{h1, AbelianGroup};
use crate::seifert::is_prime;

fn bigint_json(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

pub fn group_json(g: &AbelianGroup) -> Value {
    json!({
        "free_rank": g.free_rank(),
        "torsion": g.torsion().iter().map(bigint_json).collect::<Vec<_>>(),
    })
}

pub fn classification_json(r: &ClassificationResult) -> Value {
    let intermediate = match &r.intermediate {
        Some(s) => json!(s.pairs().iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>()),
        None => Value::Null,
    };
    json!({
        "input": r.invariant.quadruple(),
        "kind": r.invariant.kind().as_str(),
        "case": r.case_number,
        "canonical": r.manifold.to_string(),
        "h1": group_json(&h1(&r.manifold)),
        "prime": is_prime(&r.manifold),
        "intermediate_seifert": intermediate,
    })
}
