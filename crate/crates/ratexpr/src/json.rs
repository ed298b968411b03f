//! JSON encoding of expressions.
//!
//! Format: `{"num": [[coeff, {gen: exp}], ...], "den": [...]}` where `coeff`
//! and `exp` are decimal strings (`"p"` or `"p/q"`) to keep arbitrary
//! precision intact.

use std::collections::BTreeMap;

use num_traits::One;
use serde_json::{json, Map, Value};

use crate::error::SymError;
use crate::expr::{ExpMap, LaurentExpr, Monomial};
use crate::frac::RatExpr;
use crate::Rat;

fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn rat_from_value(v: &Value) -> Result<Rat, SymError> {
    let s = v
        .as_str()
        .ok_or_else(|| SymError::Encoding(format!("expected rational string, got {v}")))?;
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n = num
        .parse()
        .map_err(|e| SymError::Encoding(format!("bad numerator {num}: {e}")))?;
    let d = den
        .parse()
        .map_err(|e| SymError::Encoding(format!("bad denominator {den}: {e}")))?;
    Ok(Rat::new(n, d))
}

fn laurent_to_value(e: &LaurentExpr) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .map(|m| {
            let exps: Map<String, Value> = m
                .exps
                .iter()
                .map(|(g, x)| (g.to_string(), Value::String(rat_to_string(x))))
                .collect();
            json!([rat_to_string(&m.coeff), Value::Object(exps)])
        })
        .collect();
    Value::Array(terms)
}

fn laurent_from_value(v: &Value) -> Result<LaurentExpr, SymError> {
    let arr = v
        .as_array()
        .ok_or_else(|| SymError::Encoding("term list must be an array".into()))?;
    let mut terms = Vec::with_capacity(arr.len());
    for t in arr {
        let pair = t
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| SymError::Encoding("term must be [coeff, exps]".into()))?;
        let coeff = rat_from_value(&pair[0])?;
        let obj = pair[1]
            .as_object()
            .ok_or_else(|| SymError::Encoding("exponents must be an object".into()))?;
        let mut exps = ExpMap::new();
        for (g, x) in obj {
            exps = exps.mul(&ExpMap::single(g, rat_from_value(x)?));
        }
        terms.push(Monomial { coeff, exps });
    }
    Ok(LaurentExpr::from_terms(terms))
}

impl LaurentExpr {
    pub fn to_json(&self) -> Value {
        laurent_to_value(self)
    }

    pub fn from_json(v: &Value) -> Result<Self, SymError> {
        laurent_from_value(v)
    }
}

impl RatExpr {
    pub fn to_json(&self) -> Value {
        json!({
            "num": laurent_to_value(self.num()),
            "den": laurent_to_value(self.den()),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, SymError> {
        let obj = v
            .as_object()
            .ok_or_else(|| SymError::Encoding("expression must be an object".into()))?;
        let num = laurent_from_value(
            obj.get("num")
                .ok_or_else(|| SymError::Encoding("missing `num`".into()))?,
        )?;
        let den = laurent_from_value(
            obj.get("den")
                .ok_or_else(|| SymError::Encoding("missing `den`".into()))?,
        )?;
        RatExpr::new(num, den)
    }
}

/// Parse a point specification `{"gen": "p/q", ...}` for specialization.
pub fn point_from_json(v: &Value) -> Result<BTreeMap<String, Rat>, SymError> {
    let obj = v
        .as_object()
        .ok_or_else(|| SymError::Encoding("point must be an object".into()))?;
    obj.iter()
        .map(|(g, x)| Ok((g.clone(), rat_from_value(x)?)))
        .collect()
}

/// Convenience used by callers that accept `"p/q"` strings directly.
pub fn rat_from_str(s: &str) -> Result<Rat, SymError> {
    rat_from_value(&Value::String(s.to_string()))
}
