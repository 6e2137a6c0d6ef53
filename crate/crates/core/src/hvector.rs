//! Artinian h-vectors and the structural predicates the rest of the crate
//! consumes, together with the socle and characteristic hypotheses that gate
//! the rigidity rules.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::binomial::{binom, binom_u64, macaulay_bound};
use crate::error::{Error, Result};

/// `h = (h_0, ..., h_e)` with `h_0 = 1`, `e >= 1` and every entry positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "HVectorJson", into = "HVectorJson")]
pub struct HVector {
    entries: Vec<BigUint>,
}

#[derive(Serialize, Deserialize)]
struct HVectorJson {
    #[serde(with = "crate::serde_big::uint_vec")]
    h: Vec<BigUint>,
}

impl TryFrom<HVectorJson> for HVector {
    type Error = Error;
    fn try_from(j: HVectorJson) -> Result<Self> {
        HVector::new(j.h)
    }
}

impl From<HVector> for HVectorJson {
    fn from(h: HVector) -> Self {
        HVectorJson { h: h.entries }
    }
}

impl HVector {
    /// Validates and wraps the entries. Trailing zeros are trimmed, internal
    /// zeros rejected.
    pub fn new(mut entries: Vec<BigUint>) -> Result<Self> {
        while entries.len() > 1 && entries.last().is_some_and(Zero::is_zero) {
            entries.pop();
        }
        if entries.first() != Some(&BigUint::one()) {
            return Err(Error::InvalidHVector("h_0 must equal 1".into()));
        }
        if entries.len() < 2 {
            return Err(Error::InvalidHVector(
                "socle degree must be at least 1".into(),
            ));
        }
        if let Some(i) = entries.iter().position(Zero::is_zero) {
            return Err(Error::InvalidHVector(format!(
                "internal zero at h_{i}; entries must be positive up to the socle degree"
            )));
        }
        Ok(HVector { entries })
    }

    pub fn from_u64s(entries: &[u64]) -> Result<Self> {
        HVector::new(entries.iter().copied().map(BigUint::from).collect())
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &BigUint {
        &self.entries[i]
    }

    /// The socle degree `e`.
    pub fn socle_degree(&self) -> usize {
        self.entries.len() - 1
    }

    /// The codimension `r = h_1`.
    pub fn codimension(&self) -> &BigUint {
        &self.entries[1]
    }

    /// First degree `d + 1` where `h_{d+1}` exceeds the Macaulay bound of
    /// `h_d`, with that bound.
    pub fn macaulay_violation(&self) -> Option<(usize, BigUint)> {
        (1..self.socle_degree()).find_map(|d| {
            let bound = macaulay_bound(&self.entries[d], d);
            (self.entries[d + 1] > bound).then_some((d + 1, bound))
        })
    }

    pub fn is_o_sequence(&self) -> bool {
        self.macaulay_violation().is_none()
    }

    pub fn is_symmetric(&self) -> bool {
        let e = self.socle_degree();
        (0..=e / 2).all(|i| self.entries[i] == self.entries[e - i])
    }

    /// Comma-separated entries, optionally wrapped in parentheses or brackets.
    pub fn parse_list(s: &str) -> Result<Self> {
        let trimmed = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        let entries = trimmed
            .split(',')
            .map(|t| {
                BigUint::from_str(t.trim())
                    .map_err(|_| Error::Parse(format!("`{}` is not a nonnegative integer", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        HVector::new(entries)
    }

    /// Accepts either `1,10,9,10,1` or `{"h":[1,10,9,10,1]}`.
    pub fn parse(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('{') {
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
        } else {
            HVector::parse_list(s)
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("h-vector serialization cannot fail")
    }
}

impl FromStr for HVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        HVector::parse(s)
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Socle hypothesis attached to an h-vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SocleType {
    Level,
    Gorenstein,
    /// Zero socle in every degree `<= d - 1`.
    ZeroSocleBelow(usize),
    Unspecified,
}

impl SocleType {
    pub fn is_level(self) -> bool {
        matches!(self, SocleType::Level | SocleType::Gorenstein)
    }

    /// Whether the socle vanishes in all degrees `<= d - 1` for an algebra
    /// of socle degree `e`.
    pub fn zero_socle_below(self, d: usize, e: usize) -> bool {
        match self {
            SocleType::Level | SocleType::Gorenstein => d <= e,
            SocleType::ZeroSocleBelow(bound) => d <= bound,
            SocleType::Unspecified => false,
        }
    }
}

impl fmt::Display for SocleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SocleType::Level => f.write_str("level"),
            SocleType::Gorenstein => f.write_str("gorenstein"),
            SocleType::ZeroSocleBelow(d) => write!(f, "zero-socle-below:{d}"),
            SocleType::Unspecified => f.write_str("unspecified"),
        }
    }
}

impl FromStr for SocleType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        match s.as_str() {
            "level" => Ok(SocleType::Level),
            "gorenstein" => Ok(SocleType::Gorenstein),
            "unspecified" => Ok(SocleType::Unspecified),
            _ => match s.strip_prefix("zero-socle-below:") {
                Some(d) => d
                    .parse()
                    .map(SocleType::ZeroSocleBelow)
                    .map_err(|_| Error::Parse(format!("bad degree in `{s}`"))),
                None => Err(Error::Parse(format!(
                    "unknown socle type `{s}` (expected level, gorenstein, zero-socle-below:D or unspecified)"
                ))),
            },
        }
    }
}

/// What is assumed about the characteristic of the base field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharAssumption {
    Zero,
    NotTwo,
    /// Characteristic 0 or at least `p`.
    AtLeast(u64),
    Exactly(u64),
    Arbitrary,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k.saturating_mul(k) <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

fn next_prime(mut n: u64) -> u64 {
    n = n.max(2);
    while !is_prime(n) {
        n += 1;
    }
    n
}

impl CharAssumption {
    pub fn validate(self) -> Result<Self> {
        match self {
            CharAssumption::Exactly(p) if !is_prime(p) => Err(Error::InvalidChar(format!(
                "exactly:{p} is not a prime characteristic"
            ))),
            CharAssumption::AtLeast(0) => Err(Error::InvalidChar(
                "at-least needs a positive bound".into(),
            )),
            c => Ok(c),
        }
    }

    /// Smallest positive characteristic allowed, `None` when only 0 is.
    pub fn min_positive_char(self) -> Option<u64> {
        match self {
            CharAssumption::Zero => None,
            CharAssumption::NotTwo => Some(3),
            CharAssumption::AtLeast(p) => Some(next_prime(p)),
            CharAssumption::Exactly(p) => Some(p),
            CharAssumption::Arbitrary => Some(2),
        }
    }

    /// Every allowed characteristic is 0 or `>= q`.
    pub fn zero_or_at_least(self, q: u64) -> bool {
        self.min_positive_char().is_none_or(|c| c >= q)
    }

    pub fn excludes_two(self) -> bool {
        self.zero_or_at_least(3)
    }

    /// Whether every field allowed by `self` is allowed by `other`.
    pub fn implies(self, other: CharAssumption) -> bool {
        match other {
            CharAssumption::Arbitrary => true,
            CharAssumption::Zero => self == CharAssumption::Zero,
            CharAssumption::Exactly(p) => self == CharAssumption::Exactly(p),
            CharAssumption::NotTwo => self.excludes_two(),
            CharAssumption::AtLeast(p) => self.zero_or_at_least(p),
        }
    }
}

impl fmt::Display for CharAssumption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharAssumption::Zero => f.write_str("zero"),
            CharAssumption::NotTwo => f.write_str("not-two"),
            CharAssumption::AtLeast(p) => write!(f, "at-least:{p}"),
            CharAssumption::Exactly(p) => write!(f, "exactly:{p}"),
            CharAssumption::Arbitrary => f.write_str("arbitrary"),
        }
    }
}

impl FromStr for CharAssumption {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let num = |v: &str| {
            v.parse::<u64>()
                .map_err(|_| Error::InvalidChar(format!("`{v}` is not a nonnegative integer")))
        };
        let c = match s.as_str() {
            "zero" | "0" => CharAssumption::Zero,
            "not-two" => CharAssumption::NotTwo,
            "arbitrary" | "any" => CharAssumption::Arbitrary,
            _ => {
                if let Some(p) = s.strip_prefix("at-least:") {
                    CharAssumption::AtLeast(num(p)?)
                } else if let Some(p) = s.strip_prefix("exactly:") {
                    match num(p)? {
                        0 => CharAssumption::Zero,
                        p => CharAssumption::Exactly(p),
                    }
                } else {
                    return Err(Error::InvalidChar(format!(
                        "unknown tag `{s}` (expected zero, not-two, at-least:P, exactly:P or arbitrary)"
                    )));
                }
            }
        };
        c.validate()
    }
}

impl Serialize for CharAssumption {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CharAssumption {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `(1, C(m+3,3), (m+1)^2, C(m+3,3), 1)`, a symmetric O-sequence that is
/// never a Gorenstein h-vector outside characteristic 2.
pub fn family_gorenstein_gap(m: u64) -> Result<HVector> {
    if m < 2 {
        return Err(Error::OutOfRange(format!("family needs m >= 2, got {m}")));
    }
    let r = binom_u64(m + 3, 3);
    let mid = BigUint::from(m + 1).pow(2);
    HVector::new(vec![BigUint::one(), r.clone(), mid, r, BigUint::one()])
}

/// The `m >= 1` with `n = C(m+d, d)`, if any.
pub fn binomial_shape(n: &BigUint, d: usize) -> Option<BigUint> {
    if d == 0 {
        return None;
    }
    let k = d as i64;
    let value = |m: &BigUint| binom(&(m + d), k);
    let one = BigUint::one();
    if value(&one) > *n {
        return None;
    }
    // value(lo) <= n < value(hi)
    let mut lo = one.clone();
    let mut hi = BigUint::from(2u32);
    while value(&hi) <= *n {
        lo = hi.clone();
        hi <<= 1;
    }
    while &hi - &lo > one {
        let mid: BigUint = (&lo + &hi) >> 1;
        if value(&mid) <= *n {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (value(&lo) == *n).then_some(lo)
}

/// Hilbert function of a degree-`m` plane curve at degree `d`:
/// `C(d+2,2) - C(d-m+2,2)`.
fn plane_curve_value(m: usize, d: usize) -> BigUint {
    let d = d as i64;
    let m = m as i64;
    let full = binom_u64((d + 2) as u64, 2);
    let cut = if d - m + 2 >= 0 {
        binom_u64((d - m + 2) as u64, 2)
    } else {
        BigUint::zero()
    };
    full - cut
}

/// The `m` in `[1, d]` with `n = md + 1 - C(m-1, 2)`, if any.
pub fn plane_curve_shape(n: &BigUint, d: usize) -> Option<usize> {
    if d == 0 {
        return None;
    }
    // plane_curve_value is strictly increasing in m on [1, d].
    let (mut lo, mut hi) = (1usize, d);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if plane_curve_value(mid, d) < *n {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    let m = lo;
    if plane_curve_value(m, d) != *n {
        return None;
    }
    let alt = BigUint::from(m * d + 1) - binom_u64(m as u64 - 1, 2);
    debug_assert_eq!(alt, *n);
    (alt == *n).then_some(m)
}

/// `(C(m+i, i))_{i = 0..=d}`: the Hilbert function of a linear space of
/// dimension `m`.
pub fn linear_space_prefix(m: &BigUint, d: usize) -> Vec<BigUint> {
    (0..=d).map(|i| binom(&(m + i), i as i64)).collect()
}

/// `(C(i+2,2) - C(i-m+2,2))_{i = 0..=d}`.
pub fn plane_curve_prefix(m: usize, d: usize) -> Result<HVector> {
    if m == 0 || m > d {
        return Err(Error::OutOfRange(format!(
            "plane curve prefix needs 1 <= m <= d (got m = {m}, d = {d})"
        )));
    }
    HVector::new((0..=d).map(|i| plane_curve_value(m, i)).collect())
}
