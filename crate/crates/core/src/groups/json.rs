use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use super::{Element, Group, GroupError, GroupKind};

/// Largest magnitude emitted as a plain JSON number; beyond it integers are
/// written as decimal strings.
const MAX_SAFE: u64 = 1 << 53;

pub fn encode_int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) if v.unsigned_abs() <= MAX_SAFE => json!(v),
        _ => Value::String(x.to_string()),
    }
}

pub fn decode_int(v: &Value) -> Result<BigInt, GroupError> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(GroupError::Decode(format!("{n} is not an integer")))
            }
        }
        Value::String(s) => s
            .trim()
            .parse::<BigInt>()
            .map_err(|e| GroupError::Decode(format!("{s:?}: {e}"))),
        other => Err(GroupError::Decode(format!("expected integer, got {other}"))),
    }
}

impl Group {
    pub fn encode_element(&self, a: &Element) -> Value {
        match a {
            Element::Int(x) | Element::Cyc(x) => encode_int(x),
            Element::Semi { x, h } => json!({ "x": encode_int(x), "h": h }),
            Element::Dic { s, r } => json!({ "s": s, "r": encode_int(r) }),
        }
    }

    /// Decodes an element and brings it into normal form.
    pub fn decode_element(&self, v: &Value) -> Result<Element, GroupError> {
        let raw = match &self.kind {
            GroupKind::Integers => Element::Int(decode_int(v)?),
            GroupKind::Cyclic(_) => Element::Cyc(decode_int(v)?),
            GroupKind::Semidirect { h: hs, .. } => {
                let obj = v
                    .as_object()
                    .ok_or_else(|| GroupError::Decode(format!("expected {{\"x\",\"h\"}} object, got {v}")))?;
                let x = decode_int(obj.get("x").ok_or_else(|| GroupError::Decode(format!("missing \"x\" in {v}")))?)?;
                let h = match obj.get("h") {
                    Some(Value::Array(items)) => items
                        .iter()
                        .map(|c| {
                            decode_int(c)?
                                .to_i64()
                                .ok_or_else(|| GroupError::Decode(format!("H component {c} out of range")))
                        })
                        .collect::<Result<Vec<i64>, _>>()?,
                    // a bare integer is accepted for rank-one H
                    Some(c @ Value::Number(_)) => vec![decode_int(c)?
                        .to_i64()
                        .ok_or_else(|| GroupError::Decode(format!("H component {c} out of range")))?],
                    None if hs.rank() == 0 => Vec::new(),
                    _ => return Err(GroupError::Decode(format!("missing or malformed \"h\" in {v}"))),
                };
                if h.len() != hs.rank() {
                    return Err(GroupError::Decode(format!(
                        "H part {h:?} has {} components, expected {}",
                        h.len(),
                        hs.rank()
                    )));
                }
                Element::Semi { x, h: hs.reduce(&h) }
            }
            GroupKind::Dicyclic(_) => {
                let obj = v
                    .as_object()
                    .ok_or_else(|| GroupError::Decode(format!("expected {{\"s\",\"r\"}} object, got {v}")))?;
                let s = match obj.get("s") {
                    Some(s) => decode_int(s)?,
                    None => BigInt::from(0),
                };
                let r = match obj.get("r") {
                    Some(r) => decode_int(r)?,
                    None => BigInt::from(0),
                };
                // 4s = 0
                let s = s.mod_floor(&BigInt::from(4)).to_u8().unwrap();
                Element::Dic { s, r }
            }
        };
        self.normalize(raw)
    }

    pub fn decode_elements(&self, v: &Value) -> Result<Vec<Element>, GroupError> {
        v.as_array()
            .ok_or_else(|| GroupError::Decode(format!("expected a JSON array of elements, got {v}")))?
            .iter()
            .map(|e| self.decode_element(e))
            .collect()
    }

    pub fn encode_elements(&self, items: &[Element]) -> Value {
        Value::Array(items.iter().map(|a| self.encode_element(a)).collect())
    }
}
