//! Serde adapters that write arbitrary-precision integers as decimal strings.
//!
//! JSON numbers lose precision past 2^53 in most consumers, and the sequences
//! in this crate leave that range after a few dozen indices.

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

fn parse<E: serde::de::Error>(s: &str) -> Result<BigInt, E> {
    s.parse::<BigInt>()
        .map_err(|e| E::custom(format!("invalid integer {s:?}: {e}")))
}

pub mod scalar {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        v.to_string().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s)
    }
}

pub mod list {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| parse(s))
            .collect()
    }
}

pub mod matrix {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(d)?;
        let out: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|row| row.iter().map(|s| parse(s)).collect::<Result<_, _>>())
            .collect::<Result<_, _>>()?;
        if out.iter().any(|row| row.len() != out.len()) {
            return Err(D::Error::custom("matrix is not square"));
        }
        Ok(out)
    }
}
