//! Growth of lex-segment quotients, the extremal case of Macaulay's bound.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::monomial::Monomial;
use crate::binomial::binom_u64;
use crate::error::{Error, Result};

/// Takes `S` = the `n` lex-smallest monomials of degree `d` in `r`
/// variables as the standard monomials of an ideal generated in degree `d`,
/// and counts the degree-`d+1` monomials all of whose variable quotients
/// lie in `S`: the degree-`d+1` dimension of that quotient.
pub fn lex_growth(n: u64, d: usize, r: usize) -> Result<u64> {
    if d == 0 || r == 0 {
        return Err(Error::OutOfRange(format!(
            "lex growth needs d >= 1 and r >= 1, got d = {d}, r = {r}"
        )));
    }
    let space = binom_u64(r as u64 + d as u64 - 1, d as i64);
    if BigUint::from(n) > space {
        return Err(Error::OutOfRange(format!(
            "{n} exceeds the {space} monomials of degree {d} in {r} variables"
        )));
    }
    if n == 0 {
        return Ok(0);
    }
    // The lex-smallest monomials only involve trailing variables, and a
    // monomial involving any other variable has a quotient outside S.
    let k = (1..=r)
        .find(|&k| binom_u64(k as u64 + d as u64 - 1, d as i64) >= BigUint::from(n))
        .expect("n fits in r variables");
    let standard: HashSet<Monomial> = Monomial::all_of_degree(k, d)
        .into_iter()
        .take(n.to_usize().expect("n fits in memory"))
        .collect();
    let count = Monomial::all_of_degree(k, d + 1)
        .into_iter()
        .filter(|m| {
            (0..k).all(|j| m.div_var(j).is_none_or(|q| standard.contains(&q)))
        })
        .count();
    Ok(count as u64)
}
