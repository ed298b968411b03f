//! JSON encoding: `{n, eps: [[...]], frozen: [[...]]?, lambda: [[...]]?}`.

use serde_json::{json, Value};

use crate::{CatalogEntry, ExtQuiver, Quiver, QuiverError};

fn matrix_to_value(m: &[Vec<i64>]) -> Value {
    json!(m)
}

fn matrix_from_value(v: &Value) -> Result<Vec<Vec<i64>>, QuiverError> {
    let rows = v
        .as_array()
        .ok_or_else(|| QuiverError::Encoding("matrix must be an array".into()))?;
    rows.iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| QuiverError::Encoding("matrix row must be an array".into()))?
                .iter()
                .map(|x| {
                    x.as_i64()
                        .ok_or_else(|| QuiverError::Encoding(format!("bad entry {x}")))
                })
                .collect()
        })
        .collect()
}

impl Quiver {
    pub fn to_json(&self) -> Value {
        json!({"n": self.n(), "eps": matrix_to_value(self.matrix())})
    }

    pub fn from_json(v: &Value) -> Result<Self, QuiverError> {
        let eps = matrix_from_value(
            v.get("eps")
                .ok_or_else(|| QuiverError::Encoding("missing `eps`".into()))?,
        )?;
        Quiver::new(eps)
    }
}

impl ExtQuiver {
    pub fn to_json(&self) -> Value {
        let mut obj = json!({
            "n": self.base.n(),
            "eps": matrix_to_value(self.base.matrix()),
            "frozen": matrix_to_value(&self.frozen),
        });
        if let Some(l) = &self.lambda {
            obj["lambda"] = matrix_to_value(l);
        }
        obj
    }

    pub fn from_json(v: &Value) -> Result<Self, QuiverError> {
        let base = Quiver::from_json(v)?;
        let frozen = matrix_from_value(
            v.get("frozen")
                .ok_or_else(|| QuiverError::Encoding("missing `frozen`".into()))?,
        )?;
        let lambda = v.get("lambda").map(matrix_from_value).transpose()?;
        ExtQuiver::new(base, frozen, lambda)
    }
}

impl CatalogEntry {
    pub fn to_json(&self) -> Value {
        match self {
            CatalogEntry::Plain(q) => q.to_json(),
            CatalogEntry::Extended(e) => e.to_json(),
        }
    }
}
