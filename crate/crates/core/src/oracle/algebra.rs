//! Quotients `A = R/I` of a polynomial ring by a monomial ideal, with exact
//! multiplication-map ranks.

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::field::{FieldSpec, Fp};
use super::linalg::Matrix;
use super::monomial::{Monomial, MonomialIdeal};
use crate::error::{Error, Result};
use crate::hvector::HVector;

/// Degree cap used for ideals that are not artinian when none is given.
pub const DEFAULT_DEGREE_CAP: usize = 12;

/// Range for random integer coefficients over the rationals.
pub const RATIONAL_COEFFICIENT_RANGE: i64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientAlgebra {
    ideal: MonomialIdeal,
    field: FieldSpec,
    cap: usize,
    artinian: bool,
    bases: Vec<Vec<Monomial>>,
}

impl QuotientAlgebra {
    /// Builds `R/I`. For an artinian ideal the degree range is the full
    /// socle range; otherwise bases are kept up to `cap` (default
    /// [`DEFAULT_DEGREE_CAP`]).
    pub fn new(ideal: MonomialIdeal, field: FieldSpec, cap: Option<usize>) -> Self {
        let r = ideal.num_vars();
        let powers = ideal.pure_powers();
        let artinian = powers.iter().all(Option::is_some);
        let top = if artinian {
            powers.iter().map(|p| p.unwrap_or(1).saturating_sub(1) as usize).sum()
        } else {
            cap.unwrap_or(DEFAULT_DEGREE_CAP)
        };
        let mut bases = Vec::new();
        for d in 0..=top {
            let basis: Vec<Monomial> = Monomial::all_of_degree(r, d)
                .into_iter()
                .filter(|m| !ideal.contains(m))
                .collect();
            if artinian && basis.is_empty() {
                break;
            }
            bases.push(basis);
        }
        QuotientAlgebra {
            cap: bases.len().saturating_sub(1),
            ideal,
            field,
            artinian,
            bases,
        }
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn num_vars(&self) -> usize {
        self.ideal.num_vars()
    }

    pub fn is_artinian(&self) -> bool {
        self.artinian
    }

    /// Largest degree with a stored basis.
    pub fn top_degree(&self) -> usize {
        self.cap
    }

    /// Standard monomials of degree `d`, ascending in lex order.
    pub fn basis(&self, d: usize) -> &[Monomial] {
        self.bases.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn dim(&self, d: usize) -> usize {
        self.basis(d).len()
    }

    /// Matrix of multiplication by `L` from `A_{d-1}` to `A_d`, one row per
    /// basis monomial of `A_d`, with coefficients as integers.
    fn multiplication_matrix(&self, l: &LinearForm, d: usize) -> Vec<Vec<BigInt>> {
        let src = self.basis(d - 1);
        let dst = self.basis(d);
        let index: HashMap<&Monomial, usize> = dst.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows = vec![vec![BigInt::from(0); src.len()]; dst.len()];
        for (col, u) in src.iter().enumerate() {
            for (j, coeff) in l.coeffs.iter().enumerate() {
                if let Some(&row) = index.get(&u.times_var(j)) {
                    rows[row][col] += coeff;
                }
            }
        }
        rows
    }

    /// Rank of multiplication by `L` from `A_{d-1}` to `A_d`, `d >= 1`.
    pub fn multiplication_rank(&self, l: &LinearForm, d: usize) -> usize {
        assert!(d >= 1, "multiplication maps start at A_0 -> A_1");
        let rows = self.multiplication_matrix(l, d);
        if rows.is_empty() || rows[0].is_empty() {
            return 0;
        }
        match self.field {
            FieldSpec::Rational => Matrix::from_rows(rows).rank_fraction_free(),
            FieldSpec::Prime(p) => Matrix::from_rows(
                rows.iter()
                    .map(|r| r.iter().map(|v| Fp::from_bigint(v, p)).collect())
                    .collect::<Vec<Vec<Fp>>>(),
            )
            .rank_gauss(),
        }
    }
}

/// Graded dimensions of `R/I`; `artinian` is false when the stored prefix
/// was cut at the degree cap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertFunction {
    pub values: Vec<u64>,
    pub artinian: bool,
}

impl HilbertFunction {
    pub fn to_hvector(&self) -> Result<HVector> {
        if !self.artinian {
            return Err(Error::NotArtinian {
                cap: self.values.len().saturating_sub(1),
            });
        }
        HVector::from_u64s(&self.values)
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        write!(f, "({})", vals.join(","))?;
        if !self.artinian {
            f.write_str(" ...")?;
        }
        Ok(())
    }
}

pub fn hilbert_function(a: &QuotientAlgebra) -> HilbertFunction {
    HilbertFunction {
        values: (0..=a.top_degree()).map(|d| a.dim(d) as u64).collect(),
        artinian: a.is_artinian(),
    }
}

/// Per-degree socle dimensions: standard monomials killed by every
/// variable. For monomial ideals the socle is spanned by such monomials.
pub fn socle_vector(a: &QuotientAlgebra) -> Result<Vec<u64>> {
    if !a.is_artinian() {
        return Err(Error::NotArtinian { cap: a.top_degree() });
    }
    let r = a.num_vars();
    Ok((0..=a.top_degree())
        .map(|d| {
            a.basis(d)
                .iter()
                .filter(|u| (0..r).all(|j| a.ideal().contains(&u.times_var(j))))
                .count() as u64
        })
        .collect())
}

/// A linear form `sum a_i x_i`, coefficients as integers (reduced mod `p`
/// over `F_p`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearForm {
    #[serde(with = "crate::serde_big::int_vec")]
    coeffs: Vec<BigInt>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<BigInt>, field: FieldSpec) -> Result<Self> {
        let mut coeffs = coeffs;
        if let FieldSpec::Prime(p) = field {
            for c in &mut coeffs {
                *c = BigInt::from(Fp::from_bigint(c, p).value());
            }
        }
        if coeffs.iter().all(|c| field.is_zero(c)) {
            return Err(Error::OutOfRange("linear form must be nonzero".into()));
        }
        Ok(LinearForm { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64], field: FieldSpec) -> Result<Self> {
        LinearForm::new(coeffs.iter().map(|&c| BigInt::from(c)).collect(), field)
    }

    pub fn variable(r: usize, i: usize) -> Self {
        let mut coeffs = vec![BigInt::from(0); r];
        coeffs[i] = BigInt::from(1);
        LinearForm { coeffs }
    }

    pub fn all_ones(r: usize) -> Self {
        LinearForm {
            coeffs: vec![BigInt::from(1); r],
        }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Uniform over `F_p^r \ {0}`, or integers in
    /// `[-RATIONAL_COEFFICIENT_RANGE, RATIONAL_COEFFICIENT_RANGE]` over the
    /// rationals; zero draws are redrawn.
    pub fn random(r: usize, field: FieldSpec, rng: &mut ChaCha8Rng) -> Self {
        loop {
            let coeffs: Vec<BigInt> = (0..r)
                .map(|_| match field {
                    FieldSpec::Rational => BigInt::from(
                        rng.gen_range(-RATIONAL_COEFFICIENT_RANGE..=RATIONAL_COEFFICIENT_RANGE),
                    ),
                    FieldSpec::Prime(p) => BigInt::from(rng.gen_range(0..p)),
                })
                .collect();
            if let Ok(l) = LinearForm::new(coeffs, field) {
                return l;
            }
        }
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.coeffs.len();
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.sign() == num_bigint::Sign::NoSign {
                continue;
            }
            let name = Monomial::var(r, i).to_string();
            let (neg, mag) = (c.sign() == num_bigint::Sign::Minus, c.magnitude());
            if out.is_empty() {
                out.push_str(if neg { "-" } else { "" });
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if *mag != BigUint::from(1u32) {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(&name);
        }
        f.write_str(&out)
    }
}

/// `h_d - rank(x L : A_{d-1} -> A_d)`, the degree-`d` dimension of
/// `A/(L)`.
pub fn restriction_dimension(a: &QuotientAlgebra, l: &LinearForm, d: usize) -> u64 {
    assert!(d >= 1, "restriction dimension is defined for d >= 1");
    (a.dim(d) - a.multiplication_rank(l, d)) as u64
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankRow {
    /// Source degree `i` of `A_i -> A_{i+1}`.
    pub degree: usize,
    pub rank: usize,
    pub required: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum WlpOutcome {
    /// `form` has maximal rank in every degree: a genuine witness.
    HasWlp { form: LinearForm, ranks: Vec<RankRow> },
    /// No tried form has maximal rank everywhere. A proof when `exhaustive`
    /// (every nonzero form over the prime field was tried), otherwise a
    /// Monte-Carlo observation.
    FailsForAllSampled {
        exhaustive: bool,
        forms_tried: usize,
        best: LinearForm,
        ranks: Vec<RankRow>,
    },
}

impl WlpOutcome {
    pub fn has_wlp(&self) -> bool {
        matches!(self, WlpOutcome::HasWlp { .. })
    }
}

fn rank_table(a: &QuotientAlgebra, l: &LinearForm) -> Vec<RankRow> {
    (0..a.top_degree())
        .map(|i| RankRow {
            degree: i,
            rank: a.multiplication_rank(l, i + 1),
            required: a.dim(i).min(a.dim(i + 1)),
        })
        .collect()
}

/// Every nonzero form over `F_p` in `r` variables, when there are at most
/// `limit` of them.
fn all_forms(r: usize, p: u64, limit: usize) -> Option<Vec<LinearForm>> {
    let count = (p as u128).checked_pow(r as u32)? - 1;
    if count > limit as u128 {
        return None;
    }
    let field = FieldSpec::Prime(p);
    let mut out = Vec::with_capacity(count as usize);
    let mut digits = vec![0u64; r];
    loop {
        let mut i = r;
        loop {
            if i == 0 {
                return Some(out);
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
        }
        out.push(
            LinearForm::new(digits.iter().map(|&d| BigInt::from(d)).collect(), field)
                .expect("nonzero digits"),
        );
    }
}

/// Looks for a linear form with maximal rank in every degree. Tries the
/// all-ones form and then `trials` further forms: all of them when the
/// prime field has at most `trials` nonzero forms, random ones otherwise.
pub fn wlp_test(a: &QuotientAlgebra, trials: usize, seed: u64) -> Result<WlpOutcome> {
    if !a.is_artinian() {
        return Err(Error::NotArtinian { cap: a.top_degree() });
    }
    let r = a.num_vars();
    let exhaustive_forms = match a.field() {
        FieldSpec::Prime(p) => all_forms(r, p, trials),
        FieldSpec::Rational => None,
    };
    let exhaustive = exhaustive_forms.is_some();
    let mut forms = vec![LinearForm::new(vec![BigInt::from(1); r], a.field())?];
    match exhaustive_forms {
        Some(all) => {
            let ones = forms[0].clone();
            forms.extend(all.into_iter().filter(|l| *l != ones));
        }
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            forms.extend((0..trials).map(|_| LinearForm::random(r, a.field(), &mut rng)));
        }
    }
    let mut best: Option<(usize, LinearForm, Vec<RankRow>)> = None;
    for l in &forms {
        let ranks = rank_table(a, l);
        if ranks.iter().all(|row| row.rank == row.required) {
            return Ok(WlpOutcome::HasWlp {
                form: l.clone(),
                ranks,
            });
        }
        let total: usize = ranks.iter().map(|row| row.rank).sum();
        if best.as_ref().is_none_or(|(t, _, _)| total > *t) {
            best = Some((total, l.clone(), ranks));
        }
    }
    let (_, best, ranks) = best.expect("at least one form");
    Ok(WlpOutcome::FailsForAllSampled {
        exhaustive,
        forms_tried: forms.len(),
        best,
        ranks,
    })
}

/// The form used to split `h = b + c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitForm {
    /// A variable `x_i`; both `(I : x_i)` and `(I, x_i)` stay monomial.
    Variable(usize),
    General(LinearForm),
}

/// Observed `h = b + c` for one linear form: `c = h(A/(L))` and
/// `b_i = h(R/(I:L))_{i-1}`, with `b_0 = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StanleySplit {
    pub h: Vec<u64>,
    pub b: Vec<u64>,
    pub c: Vec<u64>,
    /// Whether `b` was counted from the colon ideal (variable forms) rather
    /// than derived as `h - c`.
    pub b_from_colon: bool,
}

impl StanleySplit {
    pub fn sums_to_h(&self) -> bool {
        (0..self.h.len()).all(|i| self.b[i] + self.c[i] == self.h[i])
    }

    /// `(b_1, ..., b_e)`, the h-vector of `R/(I:L)`.
    pub fn colon_hvector(&self) -> &[u64] {
        &self.b[1..]
    }
}

pub fn stanley_split(a: &QuotientAlgebra, form: &SplitForm) -> Result<StanleySplit> {
    if !a.is_artinian() {
        return Err(Error::NotArtinian { cap: a.top_degree() });
    }
    let h = hilbert_function(a).values;
    let e = h.len() - 1;
    let (b, c, from_colon) = match form {
        SplitForm::Variable(v) => {
            if *v >= a.num_vars() {
                return Err(Error::OutOfRange(format!("no variable with index {v}")));
            }
            let colon = QuotientAlgebra::new(a.ideal().colon_var(*v), a.field(), Some(e));
            let cut = QuotientAlgebra::new(a.ideal().plus_var(*v), a.field(), Some(e));
            let b = (0..=e)
                .map(|i| if i == 0 { 0 } else { colon.dim(i - 1) as u64 })
                .collect();
            let c = (0..=e).map(|i| cut.dim(i) as u64).collect();
            (b, c, true)
        }
        SplitForm::General(l) => {
            let c: Vec<u64> = (0..=e)
                .map(|i| if i == 0 { 1 } else { restriction_dimension(a, l, i) })
                .collect();
            let b = (0..=e).map(|i| h[i] - c[i]).collect();
            (b, c, false)
        }
    };
    Ok(StanleySplit {
        h,
        b,
        c,
        b_from_colon: from_colon,
    })
}
