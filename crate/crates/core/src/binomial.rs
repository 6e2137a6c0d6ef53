//! Exact binomial calculus: Macaulay representations, offset evaluation and
//! the growth/restriction bounds built on top of them.
//!
//! Every value is a [`BigUint`]. Degrees (the lower indices) are `usize`.
//! Binomial coefficients follow the clamping convention `C(m, q) = 0`
//! whenever `m < q` or `q < 0`, which also covers negative tops.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `C(n, k)`, zero when `k < 0` or `n < k`.
pub fn binom(n: &BigUint, k: i64) -> BigUint {
    if k < 0 {
        return BigUint::zero();
    }
    let k = k as u64;
    if let Some(n) = n.to_u64() {
        if n < k {
            return BigUint::zero();
        }
        let k = k.min(n - k);
        return small_binom(n, k);
    }
    // n exceeds u64, so n - k cannot be the smaller side.
    big_binom(n, k)
}

/// [`binom`] for a signed top.
pub fn binom_signed(n: &BigInt, k: i64) -> BigUint {
    match n.sign() {
        Sign::Minus => BigUint::zero(),
        _ => binom(n.magnitude(), k),
    }
}

/// Shorthand for small arguments.
pub fn binom_u64(n: u64, k: i64) -> BigUint {
    binom(&BigUint::from(n), k)
}

fn small_binom(n: u64, k: u64) -> BigUint {
    let mut acc: u128 = 1;
    for i in 0..k {
        match acc.checked_mul(u128::from(n - i)) {
            Some(v) => acc = v / u128::from(i + 1),
            None => {
                let mut big = BigUint::from(acc);
                for j in i..k {
                    big = big * (n - j) / (j + 1);
                }
                return big;
            }
        }
    }
    BigUint::from(acc)
}

fn big_binom(n: &BigUint, k: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Offsets `(a, b)` applied to an expansion: `a` shifts every lower index,
/// `b` every upper index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OffsetPair {
    pub a: i64,
    pub b: i64,
}

impl OffsetPair {
    pub const IDENTITY: OffsetPair = OffsetPair { a: 0, b: 0 };
    /// Macaulay growth `(n_(d))^1_1`.
    pub const MACAULAY: OffsetPair = OffsetPair { a: 1, b: 1 };
    /// Green restriction `(n_(d))^{-1}_0`.
    pub const GREEN: OffsetPair = OffsetPair { a: 0, b: -1 };

    pub const fn new(a: i64, b: i64) -> Self {
        OffsetPair { a, b }
    }
}

/// One summand `C(top, bottom)` of an expansion.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BinomialTerm {
    #[serde(with = "crate::serde_big::uint")]
    pub top: BigUint,
    pub bottom: usize,
}

/// The unique representation
/// `n = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_j, j)` with
/// `n_i > n_{i-1} > ... > n_j >= j >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BinomialExpansion {
    top_degree: usize,
    terms: Vec<BinomialTerm>,
}

impl BinomialExpansion {
    /// Builds an expansion from explicit terms, checking the invariants.
    pub fn from_terms(top_degree: usize, terms: Vec<BinomialTerm>) -> Result<Self> {
        let bad = |msg: String| Err(Error::Parse(format!("invalid expansion: {msg}")));
        if top_degree == 0 || terms.is_empty() {
            return bad("needs a positive top degree and at least one term".into());
        }
        for (idx, t) in terms.iter().enumerate() {
            let expected = top_degree.checked_sub(idx).filter(|&j| j >= 1);
            if expected != Some(t.bottom) {
                return bad(format!("term {idx} has lower index {}", t.bottom));
            }
            if t.top < BigUint::from(t.bottom) {
                return bad(format!("C({}, {}) has top below bottom", t.top, t.bottom));
            }
            if idx > 0 && terms[idx - 1].top <= t.top {
                return bad("tops must be strictly decreasing".into());
            }
        }
        Ok(BinomialExpansion { top_degree, terms })
    }

    pub fn top_degree(&self) -> usize {
        self.top_degree
    }

    pub fn terms(&self) -> &[BinomialTerm] {
        &self.terms
    }

    /// The expanded integer.
    pub fn value(&self) -> BigUint {
        self.eval(OffsetPair::IDENTITY)
    }

    /// `(n_(i))^b_a`, summed term by term with clamping.
    pub fn eval(&self, offset: OffsetPair) -> BigUint {
        self.terms
            .iter()
            .map(|t| {
                let top = BigInt::from(t.top.clone()) + offset.b;
                binom_signed(&top, t.bottom as i64 + offset.a)
            })
            .sum()
    }
}

impl fmt::Display for BinomialExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, t) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "C({},{})", t.top, t.bottom)?;
        }
        Ok(())
    }
}

/// Greedy Macaulay expansion of `n` at level `i`.
pub fn expand(n: &BigUint, i: usize) -> Result<BinomialExpansion> {
    if n.is_zero() || i == 0 {
        return Err(Error::InvalidExpansion { n: n.clone(), i });
    }
    let mut rest = n.clone();
    let mut terms = Vec::with_capacity(i);
    for j in (1..=i).rev() {
        if rest.is_zero() {
            break;
        }
        let top = largest_top(&rest, j);
        rest -= binom(&top, j as i64);
        terms.push(BinomialTerm { top, bottom: j });
    }
    debug_assert!(rest.is_zero());
    Ok(BinomialExpansion {
        top_degree: i,
        terms,
    })
}

/// Largest `t` with `C(t, j) <= n`, for `n >= 1`.
fn largest_top(n: &BigUint, j: usize) -> BigUint {
    if j == 1 {
        return n.clone();
    }
    let k = j as i64;
    // C(lo, j) <= n holds at lo = j; grow hi until it fails.
    let mut lo = BigUint::from(j);
    let mut step = BigUint::one();
    let mut hi = &lo + &step;
    while binom(&hi, k) <= *n {
        lo = hi.clone();
        step <<= 1;
        hi = &lo + &step;
    }
    // Invariant: C(lo) <= n < C(hi).
    while &hi - &lo > BigUint::one() {
        let mid: BigUint = (&lo + &hi) >> 1;
        if binom(&mid, k) <= *n {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Evaluates an offset directly on `n`, with the convention that `n = 0`
/// evaluates to 0.
pub fn offset_value(n: &BigUint, d: usize, offset: OffsetPair) -> BigUint {
    assert!(d >= 1, "offset evaluation needs degree >= 1");
    if n.is_zero() {
        return BigUint::zero();
    }
    expand(n, d).expect("n and d are positive").eval(offset)
}

/// Macaulay's upper bound on `h_{d+1}` given `h_d = n`.
pub fn macaulay_bound(n: &BigUint, d: usize) -> BigUint {
    offset_value(n, d, OffsetPair::MACAULAY)
}

/// Green's upper bound on the degree-`d` entry after cutting by a general
/// linear form, given `h_d = n`.
pub fn green_bound(n: &BigUint, d: usize) -> BigUint {
    offset_value(n, d, OffsetPair::GREEN)
}

/// Lower bound on `h_2` of a Gorenstein h-vector with codimension `r` and
/// socle degree `e`:
/// `(r_(e-1))^{-1}_{-1} + (r_(e-1))^{-(e-2)}_{-(e-3)}`.
pub fn mnz_h2_bound(r: &BigUint, e: usize) -> BigUint {
    assert!(e >= 2, "socle degree must be at least 2");
    let x = expand(r, e - 1).expect("r >= 1 and e >= 2");
    let e = e as i64;
    x.eval(OffsetPair::new(-1, -1)) + x.eval(OffsetPair::new(-(e - 3), -(e - 2)))
}

/// Smallest `x` with `macaulay_bound(x, d) >= target`.
pub fn macaulay_preimage(target: &BigUint, d: usize) -> BigUint {
    if target.is_zero() {
        return BigUint::zero();
    }
    // macaulay_bound(x, d) >= x, so x = target always qualifies.
    let mut lo = BigUint::zero();
    let mut hi = target.clone();
    while lo < hi {
        let mid: BigUint = (&lo + &hi) >> 1;
        if macaulay_bound(&mid, d) >= *target {
            hi = mid;
        } else {
            lo = mid + 1u32;
        }
    }
    lo
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn pascal_row(n: usize) -> Vec<BigUint> {
        let mut row = vec![BigUint::one()];
        for _ in 0..n {
            let mut next = vec![BigUint::one(); row.len() + 1];
            for k in 1..row.len() {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
        }
        row
    }

    fn tops(e: &BinomialExpansion) -> Vec<(u64, usize)> {
        e.terms()
            .iter()
            .map(|t| (t.top.to_u64().unwrap(), t.bottom))
            .collect()
    }

    #[test]
    fn binom_basic_and_clamped() {
        assert_eq!(binom_u64(5, 3), big(10));
        assert_eq!(binom_u64(4, 7), big(0));
        assert_eq!(binom_u64(4, -1), big(0));
        assert_eq!(binom_u64(0, 0), big(1));
        assert_eq!(binom_signed(&BigInt::from(-3), 2), big(0));
        assert_eq!(binom_signed(&BigInt::from(-3), -1), big(0));
    }

    #[test]
    fn binom_matches_pascal_recurrence() {
        let row = pascal_row(60);
        for (k, expected) in row.iter().enumerate() {
            assert_eq!(&binom_u64(60, k as i64), expected, "C(60,{k})");
        }
        assert_eq!(
            binom_u64(60, 30).to_string(),
            "118264581564861424"
        );
        let row = pascal_row(140);
        assert_eq!(binom_u64(140, 70), row[70]);
    }

    #[test]
    fn binom_huge_top() {
        let n = BigUint::from(u64::MAX) * 4u32;
        let two = binom(&n, 2);
        assert_eq!(two, &n * (&n - 1u32) / 2u32);
    }

    #[test]
    fn expand_examples() {
        assert_eq!(tops(&expand(&big(10), 3).unwrap()), vec![(5, 3)]);
        assert_eq!(
            tops(&expand(&big(14), 4).unwrap()),
            vec![(5, 4), (4, 3), (3, 2), (2, 1)]
        );
        assert_eq!(tops(&expand(&big(9), 2).unwrap()), vec![(4, 2), (3, 1)]);
        assert!(expand(&big(0), 3).is_err());
        assert!(expand(&big(3), 0).is_err());
    }

    #[test]
    fn eval_offset_examples() {
        let ten = expand(&big(10), 3).unwrap();
        assert_eq!(ten.eval(OffsetPair::new(-1, -1)), big(6));
        assert_eq!(ten.eval(OffsetPair::IDENTITY), big(10));
        let fourteen = expand(&big(14), 4).unwrap();
        assert_eq!(fourteen.eval(OffsetPair::GREEN), big(4));
    }

    #[test]
    fn bound_examples() {
        assert_eq!(macaulay_bound(&big(9), 2), big(16));
        assert_eq!(macaulay_bound(&big(2), 2), big(2));
        for d in 1..10 {
            assert_eq!(macaulay_bound(&big(1), d), big(1));
            assert_eq!(macaulay_bound(&big(0), d), big(0));
            assert_eq!(green_bound(&big(0), d), big(0));
        }
        assert_eq!(green_bound(&big(14), 4), big(4));
        assert_eq!(green_bound(&big(18), 5), big(4));
        for e in 2..15u64 {
            assert_eq!(green_bound(&big(e), e as usize - 1), big(1));
        }
        for m in 1..8u64 {
            for d in 1..6usize {
                let n = binom_u64(m + d as u64, d as i64);
                assert_eq!(green_bound(&n, d), binom_u64(m - 1 + d as u64, d as i64));
            }
        }
    }

    #[test]
    fn mnz_examples() {
        assert_eq!(mnz_h2_bound(&big(10), 4), big(9));
        for m in 2..=8u64 {
            assert_eq!(mnz_h2_bound(&binom_u64(m + 3, 3), 4), big((m + 1) * (m + 1)));
        }
        for e in 3..=12u64 {
            assert!(mnz_h2_bound(&big(e), e as usize) >= big(e));
        }
    }

    #[test]
    fn from_terms_validates() {
        let ok = BinomialExpansion::from_terms(
            2,
            vec![
                BinomialTerm { top: big(4), bottom: 2 },
                BinomialTerm { top: big(3), bottom: 1 },
            ],
        )
        .unwrap();
        assert_eq!(ok.value(), big(9));
        assert_eq!(ok.to_string(), "C(4,2) + C(3,1)");
        assert!(BinomialExpansion::from_terms(
            2,
            vec![
                BinomialTerm { top: big(4), bottom: 2 },
                BinomialTerm { top: big(4), bottom: 1 },
            ],
        )
        .is_err());
        assert!(BinomialExpansion::from_terms(
            2,
            vec![BinomialTerm { top: big(1), bottom: 2 }]
        )
        .is_err());
    }

    #[test]
    fn reconstruction() {
        for d in 1..=8 {
            for n in 1..=10_000u64 {
                assert_eq!(expand(&big(n), d).unwrap().value(), big(n), "n={n} d={d}");
            }
        }
    }

    /// Every strictly decreasing valid term list whose sum is n, found by
    /// exhaustive search.
    fn all_expansions(n: u64, i: usize) -> Vec<Vec<(u64, usize)>> {
        fn go(
            rest: u64,
            j: usize,
            max_top: u64,
            acc: &mut Vec<(u64, usize)>,
            out: &mut Vec<Vec<(u64, usize)>>,
        ) {
            if rest == 0 && !acc.is_empty() {
                out.push(acc.clone());
                return;
            }
            if j == 0 || rest == 0 {
                return;
            }
            for top in j as u64..max_top {
                let v = binom_u64(top, j as i64).to_u64().unwrap();
                if v > rest {
                    break;
                }
                acc.push((top, j));
                go(rest - v, j - 1, top, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(n, i, n + i as u64 + 1, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn uniqueness_by_exhaustive_search() {
        for d in 1..=5 {
            for n in 1..=300u64 {
                let found = all_expansions(n, d);
                assert_eq!(found.len(), 1, "n={n} d={d}: {found:?}");
                assert_eq!(found[0], tops(&expand(&big(n), d).unwrap()));
            }
        }
    }

    #[test]
    fn monotone_and_bounded() {
        for d in 1..=6 {
            let mut prev_mac = BigUint::zero();
            let mut prev_green = BigUint::zero();
            for n in 1..=2000u64 {
                let mac = macaulay_bound(&big(n), d);
                let green = green_bound(&big(n), d);
                assert!(mac > prev_mac, "macaulay strictly increasing at n={n} d={d}");
                assert!(green >= prev_green);
                assert!(mac >= big(n));
                assert!(green <= big(n));
                prev_mac = mac;
                prev_green = green;
            }
        }
    }

    #[test]
    fn preimage_is_minimal() {
        for d in 1..=4 {
            for target in 0..=300u64 {
                let x = macaulay_preimage(&big(target), d);
                assert!(macaulay_bound(&x, d) >= big(target));
                if !x.is_zero() {
                    assert!(macaulay_bound(&(&x - 1u32), d) < big(target));
                }
            }
        }
    }
}
