//! Canonical JSON encoding.
//!
//! * [`PrimeLaurent`]: `{"<p-exp>": "<num>/<den>", ...}`, descending exponents.
//! * [`XPoly`]: `{"nvars": n, "terms": [{"x": [e0, ..], "c": <PrimeLaurent>}, ..]}`
//!   in canonical term order.
//! * [`VSeries`]: `{"order": N, "coeffs": [<XPoly>, ..]}`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use super::{Monomial, PrimeLaurent, VSeries, XPoly};
use crate::error::{Error, Result};

fn bad(msg: impl Into<String>) -> Error {
    Error::Json(msg.into())
}

pub fn rational_to_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Accepts `"a/b"` or a bare integer `"a"`; the result is reduced.
pub fn rational_from_str(s: &str) -> Result<BigRational> {
    let parse = |t: &str| BigInt::from_str(t.trim()).map_err(|_| bad(format!("bad integer {t:?}")));
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse(d)?;
            if d == BigInt::from(0) {
                return Err(bad("zero denominator"));
            }
            Ok(BigRational::new(parse(n)?, d))
        }
        None => Ok(BigRational::from_integer(parse(s)?)),
    }
}

pub fn laurent_to_json(a: &PrimeLaurent) -> Value {
    let mut map = Map::new();
    for (e, c) in a.terms().rev() {
        map.insert(e.to_string(), Value::String(rational_to_string(c)));
    }
    Value::Object(map)
}

pub fn laurent_from_json(v: &Value) -> Result<PrimeLaurent> {
    let obj = v.as_object().ok_or_else(|| bad("coefficient must be an object"))?;
    let mut pairs = Vec::with_capacity(obj.len());
    for (k, c) in obj {
        let e = k.parse::<i32>().map_err(|_| bad(format!("bad exponent {k:?}")))?;
        let c = c.as_str().ok_or_else(|| bad("coefficient value must be a string"))?;
        pairs.push((e, rational_from_str(c)?));
    }
    Ok(PrimeLaurent::from_terms(pairs))
}

pub fn xpoly_to_json(a: &XPoly) -> Value {
    let terms: Vec<Value> = a.terms().map(|(m, c)| json!({"x": m.exps(), "c": laurent_to_json(c)})).collect();
    json!({"nvars": a.nvars(), "terms": terms})
}

pub fn xpoly_from_json(v: &Value) -> Result<XPoly> {
    let nvars = v.get("nvars").and_then(Value::as_u64).ok_or_else(|| bad("missing nvars"))? as usize;
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let exps = t
            .get("x")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("term without x"))?
            .iter()
            .map(|e| e.as_u64().map(|e| e as u32).ok_or_else(|| bad("bad exponent")))
            .collect::<Result<Vec<u32>>>()?;
        if exps.len() != nvars {
            return Err(bad("exponent vector length differs from nvars"));
        }
        let c = laurent_from_json(t.get("c").ok_or_else(|| bad("term without c"))?)?;
        out.push((Monomial::new(exps), c));
    }
    Ok(XPoly::from_terms(nvars, out))
}

pub fn vseries_to_json(s: &VSeries) -> Value {
    json!({
        "order": s.order(),
        "coeffs": s.coeffs().iter().map(xpoly_to_json).collect::<Vec<_>>(),
    })
}

pub fn vseries_from_json(v: &Value) -> Result<VSeries> {
    let order = v.get("order").and_then(Value::as_u64).ok_or_else(|| bad("missing order"))? as usize;
    let coeffs = v
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing coeffs"))?
        .iter()
        .map(xpoly_from_json)
        .collect::<Result<Vec<_>>>()?;
    if coeffs.len() != order + 1 {
        return Err(bad("coefficient count does not match order"));
    }
    VSeries::from_coeffs(coeffs[0].nvars(), coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    #[test]
    fn laurent_encoding_is_canonical() {
        let a = PrimeLaurent::from_terms([(-3, ratio(1, 2)), (2, ratio(-4, 1))]);
        let v = laurent_to_json(&a);
        assert_eq!(v.to_string(), r#"{"2":"-4/1","-3":"1/2"}"#);
        assert_eq!(laurent_from_json(&v).unwrap(), a);
    }

    #[test]
    fn xpoly_encoding() {
        let a = &XPoly::var(2, 1) + &XPoly::constant(2, PrimeLaurent::p_pow(-1));
        let v = xpoly_to_json(&a);
        assert_eq!(v.to_string(), r#"{"nvars":2,"terms":[{"x":[0,1],"c":{"0":"1/1"}},{"x":[0,0],"c":{"-1":"1/1"}}]}"#);
        assert_eq!(xpoly_from_json(&v).unwrap(), a);
    }

    #[test]
    fn malformed_input() {
        assert!(xpoly_from_json(&json!({"nvars": 2, "terms": [{"x": [1], "c": {}}]})).is_err());
        assert!(rational_from_str("1/0").is_err());
        assert!(laurent_from_json(&json!({"a": "1"})).is_err());
        assert!(vseries_from_json(&json!({"order": 3, "coeffs": []})).is_err());
    }
}
