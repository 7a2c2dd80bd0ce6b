//! Integer coefficients in JSON: a number when it fits in `i64`, otherwise a
//! decimal string. Usable with `#[serde(with = "…")]`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub(crate) struct Coefficient<'a>(pub &'a BigInt);

impl Serialize for Coefficient<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
pub(crate) enum RawCoefficient {
    Small(i64),
    Big(String),
}

impl RawCoefficient {
    pub(crate) fn into_bigint<E: serde::de::Error>(self) -> Result<BigInt, E> {
        match self {
            RawCoefficient::Small(v) => Ok(BigInt::from(v)),
            RawCoefficient::Big(s) => s.parse::<BigInt>().map_err(E::custom),
        }
    }
}

pub(crate) fn serialize<S: Serializer>(c: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    Coefficient(c).serialize(s)
}

pub(crate) fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    RawCoefficient::deserialize(d)?.into_bigint()
}
