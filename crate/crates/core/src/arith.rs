//! Exact scalar helpers: rational parsing and rendering, and JSON encodings
//! for arbitrary-precision integers.
//!
//! Integers inside the 53-bit range are written as JSON numbers; larger ones
//! as decimal strings. Rationals are always written as `"num/den"` strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

const JSON_SAFE: i64 = (1 << 53) - 1;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn render_rational(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::parse(format!("bad rational numerator `{num}`")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::parse(format!("bad rational denominator `{den}`")))?;
    if den.is_zero() {
        return Err(Error::parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(num, den))
}

pub fn parse_bigint(s: &str) -> Result<BigInt> {
    s.trim()
        .parse()
        .map_err(|_| Error::parse(format!("bad integer `{s}`")))
}

/// JSON value for an integer: number when within 53 bits, else a string.
pub fn bigint_to_json(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(v) if v.abs() <= JSON_SAFE => serde_json::Value::from(v),
        _ => serde_json::Value::String(x.to_string()),
    }
}

pub fn bigint_from_json(v: &serde_json::Value) -> Result<BigInt> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::parse(format!("non-integer number {n}"))),
        serde_json::Value::String(s) => parse_bigint(s),
        other => Err(Error::parse(format!("expected integer, found {other}"))),
    }
}

/// `serde(with = ...)` adapter for a single `BigInt`.
pub mod json_bigint {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
        bigint_to_json(x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigInt, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        bigint_from_json(&v).map_err(de::Error::custom)
    }
}

/// `serde(with = ...)` adapter for `Vec<BigInt>`.
pub mod json_bigint_vec {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
        xs.iter().map(bigint_to_json).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<BigInt>, D::Error> {
        let vs = Vec::<serde_json::Value>::deserialize(d)?;
        vs.iter()
            .map(|v| bigint_from_json(v).map_err(de::Error::custom))
            .collect()
    }
}

/// `serde(with = ...)` adapter writing a rational as `"num/den"`.
pub mod json_rational {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&render_rational(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        match v {
            serde_json::Value::String(s) => parse_rational(&s).map_err(de::Error::custom),
            serde_json::Value::Number(n) => n
                .as_i64()
                .map(q)
                .ok_or_else(|| de::Error::custom(format!("non-integer number {n}"))),
            other => Err(de::Error::custom(format!("expected rational, found {other}"))),
        }
    }
}
