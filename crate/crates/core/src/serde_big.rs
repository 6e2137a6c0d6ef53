//! JSON encoding for arbitrary-precision integers: a plain number when the
//! value fits 64 bits, a decimal string otherwise. Both forms are accepted
//! on input.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Repr {
    Unsigned(u64),
    Signed(i64),
    Text(String),
}

fn repr_uint(n: &BigUint) -> Repr {
    n.to_u64().map_or_else(|| Repr::Text(n.to_string()), Repr::Unsigned)
}

fn repr_int(n: &BigInt) -> Repr {
    n.to_i64().map_or_else(|| Repr::Text(n.to_string()), Repr::Signed)
}

fn parse_uint<E: serde::de::Error>(r: Repr) -> Result<BigUint, E> {
    match r {
        Repr::Unsigned(v) => Ok(v.into()),
        Repr::Signed(v) => u64::try_from(v)
            .map(BigUint::from)
            .map_err(|_| E::custom(format!("expected a nonnegative integer, got {v}"))),
        Repr::Text(s) => BigUint::from_str(s.trim()).map_err(E::custom),
    }
}

fn parse_int<E: serde::de::Error>(r: Repr) -> Result<BigInt, E> {
    match r {
        Repr::Unsigned(v) => Ok(v.into()),
        Repr::Signed(v) => Ok(v.into()),
        Repr::Text(s) => BigInt::from_str(s.trim()).map_err(E::custom),
    }
}

pub mod uint {
    use super::*;

    pub fn serialize<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        repr_uint(n).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        parse_uint(Repr::deserialize(d)?)
    }
}

pub mod uint_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(repr_uint).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        Vec::<Repr>::deserialize(d)?
            .into_iter()
            .map(parse_uint)
            .collect()
    }
}

pub mod int_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(repr_int).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<Repr>::deserialize(d)?.into_iter().map(parse_int).collect()
    }
}

/// A closed interval as a two-element array `[lo, hi]`.
pub mod int_pair {
    use super::*;

    pub fn serialize<S: Serializer>(v: &(BigInt, BigInt), s: S) -> Result<S::Ok, S::Error> {
        [repr_int(&v.0), repr_int(&v.1)].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<(BigInt, BigInt), D::Error> {
        let v = Vec::<Repr>::deserialize(d)?;
        if v.len() != 2 {
            return Err(D::Error::custom("interval must have exactly two endpoints"));
        }
        let mut it = v.into_iter();
        let lo = parse_int(it.next().unwrap())?;
        let hi = parse_int(it.next().unwrap())?;
        Ok((lo, hi))
    }
}
