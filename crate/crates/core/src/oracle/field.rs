//! Base fields for the oracle: the rationals or a prime field `F_p`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hvector::is_prime;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    /// `0` selects the rationals; any other value must be a prime below 2^32.
    pub fn new(characteristic: u64) -> Result<Self> {
        match characteristic {
            0 => Ok(FieldSpec::Rational),
            p if p >= 1 << 32 => Err(Error::InvalidChar(format!(
                "characteristic {p} is too large (limit 2^32)"
            ))),
            p if is_prime(p) => Ok(FieldSpec::Prime(p)),
            p => Err(Error::InvalidChar(format!("{p} is not a prime"))),
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => p,
        }
    }

    /// Maps an integer into the field, as an element of `F_p`; `None` over
    /// the rationals.
    pub fn reduce(self, v: &BigInt) -> Option<Fp> {
        match self {
            FieldSpec::Rational => None,
            FieldSpec::Prime(p) => Some(Fp::from_bigint(v, p)),
        }
    }

    /// Whether the integer is zero in this field.
    pub fn is_zero(self, v: &BigInt) -> bool {
        match self {
            FieldSpec::Rational => v.sign() == num_bigint::Sign::NoSign,
            FieldSpec::Prime(p) => Fp::from_bigint(v, p).value() == 0,
        }
    }
}

impl TryFrom<u64> for FieldSpec {
    type Error = Error;
    fn try_from(c: u64) -> Result<Self> {
        FieldSpec::new(c)
    }
}

impl From<FieldSpec> for u64 {
    fn from(f: FieldSpec) -> u64 {
        f.characteristic()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => f.write_str("Q"),
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// Element of `F_p` carrying its modulus, `p < 2^32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: u64, modulus: u64) -> Self {
        debug_assert!(modulus >= 2 && modulus < 1 << 32);
        Fp {
            value: value % modulus,
            modulus,
        }
    }

    pub fn from_i64(v: i64, modulus: u64) -> Self {
        Fp::new(v.rem_euclid(modulus as i64) as u64, modulus)
    }

    pub fn from_bigint(v: &BigInt, modulus: u64) -> Self {
        let r = v.mod_floor(&BigInt::from(modulus));
        Fp::new(r.abs().to_u64().expect("reduced below modulus"), modulus)
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn add(self, o: Fp) -> Fp {
        Fp::new(self.value + o.value, self.modulus)
    }

    pub fn sub(self, o: Fp) -> Fp {
        Fp::new(self.value + self.modulus - o.value, self.modulus)
    }

    pub fn mul(self, o: Fp) -> Fp {
        Fp::new(self.value * o.value, self.modulus)
    }

    pub fn neg(self) -> Fp {
        Fp::new(self.modulus - self.value, self.modulus)
    }

    pub fn pow(self, mut e: u64) -> Fp {
        let (mut base, mut acc) = (self, Fp::new(1, self.modulus));
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat; panics on zero.
    pub fn inv(self) -> Fp {
        assert!(self.value != 0, "inverse of zero in F_{}", self.modulus);
        self.pow(self.modulus - 2)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_spec_validation() {
        assert_eq!(FieldSpec::new(0).unwrap(), FieldSpec::Rational);
        assert_eq!(FieldSpec::new(101).unwrap(), FieldSpec::Prime(101));
        assert!(FieldSpec::new(1).is_err());
        assert!(FieldSpec::new(15).is_err());
        assert_eq!(FieldSpec::Prime(7).to_string(), "F_7");
    }

    #[test]
    fn arithmetic_mod_p() {
        let p = 101;
        for a in 1..p {
            let x = Fp::new(a, p);
            assert_eq!(x.mul(x.inv()), Fp::new(1, p));
            assert_eq!(x.add(x.neg()), Fp::new(0, p));
        }
        assert_eq!(Fp::from_i64(-1, 7).value(), 6);
        assert_eq!(Fp::from_bigint(&BigInt::from(-15), 7).value(), 6);
        let big = (1u64 << 32) - 5; // prime
        let x = Fp::new(big - 1, big);
        assert_eq!(x.mul(x).value(), 1);
    }
}
