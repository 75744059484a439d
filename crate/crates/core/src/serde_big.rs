//! Serde adapters writing big integers as decimal strings, so reports stay
//! readable and round-trip through any JSON parser. Plain JSON integers are
//! accepted on input.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::{self, Deserialize, Deserializer};
use serde::ser::Serializer;
use serde_json::Value;

fn parse<E: de::Error>(v: Value) -> std::result::Result<BigInt, E> {
    match v {
        Value::String(s) => BigInt::from_str(&s).map_err(|_| E::custom(format!("bad integer {s:?}"))),
        Value::Number(n) => BigInt::from_str(&n.to_string()).map_err(|_| E::custom(format!("not an integer: {n}"))),
        other => Err(E::custom(format!("expected an integer, got {other}"))),
    }
}

pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigInt, D::Error> {
    parse(Value::deserialize(d)?)
}

pub mod opt {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match v {
            Some(x) => s.serialize_some(&x.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<BigInt>, D::Error> {
        match Value::deserialize(d)? {
            Value::Null => Ok(None),
            v => parse(v).map(Some),
        }
    }
}

pub mod vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&x.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<BigInt>, D::Error> {
        Vec::<Value>::deserialize(d)?.into_iter().map(parse).collect()
    }
}
