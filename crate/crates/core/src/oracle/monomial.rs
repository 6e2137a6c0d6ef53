//! Monomials and monomial ideals in `k[x_1, ..., x_r]`.
//!
//! Lex order has `x_1 > x_2 > ... > x_r`, which is exactly the ordering of
//! exponent vectors compared left to right.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

const LETTERS: [char; 4] = ['x', 'y', 'z', 'w'];

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(r: usize) -> Self {
        Monomial { exps: vec![0; r] }
    }

    pub fn var(r: usize, i: usize) -> Self {
        let mut exps = vec![0; r];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn times_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] += 1;
        Monomial { exps }
    }

    /// `self / x_i`, if `x_i` divides `self`.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        (self.exps[i] > 0).then(|| {
            let mut exps = self.exps.clone();
            exps[i] -= 1;
            Monomial { exps }
        })
    }

    /// `self / gcd(self, x_i)`: the generator of `(m) : x_i`.
    pub fn colon_var(&self, i: usize) -> Monomial {
        self.div_var(i).unwrap_or_else(|| self.clone())
    }

    /// All monomials of degree `d` in `r` variables, ascending in lex order
    /// (so the first one is `x_r^d`).
    pub fn all_of_degree(r: usize, d: usize) -> Vec<Monomial> {
        fn go(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(Monomial { exps: cur.clone() });
                return;
            }
            for e in 0..=left {
                cur[i] = e;
                go(i + 1, left - e, cur, out);
            }
        }
        if r == 0 {
            return if d == 0 { vec![Monomial::one(0)] } else { Vec::new() };
        }
        let mut out = Vec::new();
        go(0, d as u32, &mut vec![0; r], &mut out);
        out
    }
}

fn var_name(r: usize, i: usize) -> String {
    if r <= LETTERS.len() {
        LETTERS[i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.exps.len();
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| match e {
                1 => var_name(r, i),
                _ => format!("{}^{e}", var_name(r, i)),
            })
            .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// Ideal generated by monomials, kept as its sorted minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    num_vars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(num_vars: usize, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.num_vars() != num_vars) {
            return Err(Error::InvalidIdeal(format!(
                "generator {g} has {} variables, expected {num_vars}",
                g.num_vars()
            )));
        }
        let mut gens = gens;
        gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::new();
        for g in gens {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        Ok(MonomialIdeal {
            num_vars,
            gens: minimal,
        })
    }

    pub fn zero(num_vars: usize) -> Self {
        MonomialIdeal {
            num_vars,
            gens: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `(I : x_i)`, generated by the generators with one factor `x_i`
    /// removed.
    pub fn colon_var(&self, i: usize) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.colon_var(i)).collect();
        MonomialIdeal::new(self.num_vars, gens).expect("same ring")
    }

    /// `I + (x_i)`.
    pub fn plus_var(&self, i: usize) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.push(Monomial::var(self.num_vars, i));
        MonomialIdeal::new(self.num_vars, gens).expect("same ring")
    }

    /// For each variable, the smallest pure power in the ideal.
    pub fn pure_powers(&self) -> Vec<Option<u32>> {
        (0..self.num_vars)
            .map(|i| {
                self.gens
                    .iter()
                    .filter(|g| g.exps.iter().enumerate().all(|(j, &e)| j == i || e == 0))
                    .map(|g| g.exps[i])
                    .min()
            })
            .collect()
    }

    /// Whether `R/I` is finite-dimensional, i.e. every variable has a pure
    /// power in `I`.
    pub fn is_artinian(&self) -> bool {
        self.pure_powers().iter().all(Option::is_some)
    }

    /// Parses comma-separated power products such as `x^2, y*z, w^3` or
    /// `x1^2, x2 x3`. Single letters `x, y, z, w` denote variables 1..4;
    /// `xN` denotes variable N. Juxtaposed letters (`xy`) multiply.
    pub fn parse(s: &str, num_vars: usize) -> Result<Self> {
        let mut gens = Vec::new();
        for raw in s.split(',') {
            let term = raw.trim();
            if term.is_empty() {
                continue;
            }
            gens.push(parse_monomial(term, num_vars)?);
        }
        MonomialIdeal::new(num_vars, gens)
    }
}

fn parse_monomial(term: &str, r: usize) -> Result<Monomial> {
    let bad = |why: &str| Error::Parse(format!("monomial `{term}`: {why}"));
    let mut exps = vec![0u32; r];
    let chars: Vec<char> = term.chars().collect();
    let mut i = 0;
    let number = |i: &mut usize| -> Option<u32> {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        (start < *i).then(|| chars[start..*i].iter().collect::<String>().parse().ok())?
    };
    let mut saw_factor = false;
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() || ch == '*' {
            i += 1;
            continue;
        }
        if ch == '1' && !saw_factor && chars[i + 1..].iter().all(|c| c.is_whitespace()) {
            return Ok(Monomial::one(r));
        }
        let Some(letter) = LETTERS.iter().position(|&l| l == ch.to_ascii_lowercase()) else {
            return Err(bad(&format!("unexpected `{ch}`")));
        };
        i += 1;
        let var = match (ch.to_ascii_lowercase(), number(&mut i)) {
            ('x', Some(n)) if n >= 1 => n as usize - 1,
            (_, Some(_)) => return Err(bad("only x takes an index")),
            (_, None) => letter,
        };
        if var >= r {
            return Err(bad(&format!("variable index {} exceeds {r} variables", var + 1)));
        }
        let mut power = 1;
        if i < chars.len() && chars[i] == '^' {
            i += 1;
            power = number(&mut i).ok_or_else(|| bad("expected an exponent after `^`"))?;
        }
        exps[var] += power;
        saw_factor = true;
    }
    if !saw_factor {
        return Err(bad("empty"));
    }
    Ok(Monomial::new(exps))
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(ToString::to_string).collect();
        write!(f, "({})", gens.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_minimalize() {
        let i = MonomialIdeal::parse("x^2, y^2, z^2, x^2*y", 3).unwrap();
        assert_eq!(i.generators().len(), 3);
        assert_eq!(i.to_string(), "(x^2, y^2, z^2)");
        let j = MonomialIdeal::parse("x1^2, x2 x3, x3^3", 3).unwrap();
        assert!(j.contains(&Monomial::new(vec![0, 1, 1])));
        assert!(!j.contains(&Monomial::new(vec![1, 0, 2])));
        let k = MonomialIdeal::parse("xy, x^3", 2).unwrap();
        assert_eq!(k.generators(), &[Monomial::new(vec![1, 1]), Monomial::new(vec![3, 0])]);
        assert!(MonomialIdeal::parse("q^2", 2).is_err());
        assert!(MonomialIdeal::parse("z", 2).is_err());
        assert!(MonomialIdeal::parse("x^", 2).is_err());
        let unit = MonomialIdeal::parse("1", 2).unwrap();
        assert!(unit.contains(&Monomial::one(2)));
        assert_eq!(MonomialIdeal::parse("", 2).unwrap(), MonomialIdeal::zero(2));
    }

    #[test]
    fn lex_order_of_degree_lists() {
        let ms = Monomial::all_of_degree(3, 2);
        assert_eq!(ms.len(), 6);
        assert_eq!(ms[0], Monomial::new(vec![0, 0, 2]));
        assert_eq!(ms[5], Monomial::new(vec![2, 0, 0]));
        assert!(ms.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn colon_and_sum() {
        let i = MonomialIdeal::parse("x^2, y^2, z^2", 3).unwrap();
        assert_eq!(i.colon_var(2).to_string(), "(z, x^2, y^2)");
        assert_eq!(i.plus_var(2), MonomialIdeal::parse("x^2,y^2,z", 3).unwrap());
        assert!(i.is_artinian());
        assert!(!MonomialIdeal::parse("x^2, xy", 2).unwrap().is_artinian());
    }
}
