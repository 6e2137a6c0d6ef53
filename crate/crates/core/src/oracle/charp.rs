//! Plane-curve rigidity fails in small characteristic: for
//! `W = span(x^p G, y^p G, z^p G)` in degree `d = p + deg G`, a general
//! hyperplane section keeps only two dimensions because restricted `p`-th
//! powers of linear forms in two variables are dependent.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::field::Fp;
use super::linalg::Matrix;
use super::monomial::Monomial;
use crate::binomial::{binom_u64, green_bound};
use crate::error::{Error, Result};
use crate::hvector::{is_prime, plane_curve_shape};

/// Sparse polynomial over `F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Poly {
    p: u64,
    terms: BTreeMap<Monomial, Fp>,
}

impl Poly {
    fn zero(p: u64) -> Self {
        Poly {
            p,
            terms: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: Monomial, c: Fp) {
        let entry = self.terms.entry(m).or_insert(Fp::new(0, self.p));
        *entry = entry.add(c);
        if entry.value() == 0 {
            let key = self.terms.iter().find(|(_, v)| v.value() == 0).map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    fn mul(&self, o: &Poly) -> Poly {
        let mut out = Poly::zero(self.p);
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let m = Monomial::new(
                    a.exponents().iter().zip(b.exponents()).map(|(x, y)| x + y).collect(),
                );
                out.add_term(m, ca.mul(*cb));
            }
        }
        out
    }

    fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::zero(self.p);
        let r = self.terms.keys().next().map_or(3, Monomial::num_vars);
        acc.add_term(Monomial::one(r), Fp::new(1, self.p));
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Coefficients against a monomial basis.
    fn coordinates(&self, basis: &[Monomial]) -> Vec<Fp> {
        basis
            .iter()
            .map(|m| self.terms.get(m).copied().unwrap_or(Fp::new(0, self.p)))
            .collect()
    }

    /// Substitutes `z = -(h1 x + h2 y)/h3`, giving a polynomial in `x, y`.
    fn restrict(&self, h: [Fp; 3]) -> Poly {
        let p = self.p;
        let inv = h[2].inv();
        let mut zsub = Poly::zero(p);
        zsub.add_term(Monomial::new(vec![1, 0]), h[0].mul(inv).neg());
        zsub.add_term(Monomial::new(vec![0, 1]), h[1].mul(inv).neg());
        let mut out = Poly::zero(p);
        for (m, c) in &self.terms {
            let e = m.exponents();
            let mut head = Poly::zero(p);
            head.add_term(Monomial::new(vec![e[0], e[1]]), *c);
            for (k, v) in head.mul(&zsub.pow(e[2])).terms {
                out.add_term(k, v);
            }
        }
        out
    }
}

impl std::fmt::Display for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| match (c.value(), m.degree()) {
                (v, 0) => v.to_string(),
                (1, _) => m.to_string(),
                (v, _) => format!("{v}*{m}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperplaneSample {
    /// `H = h1 x + h2 y + h3 z`.
    pub h: [u64; 3],
    pub dim_w_h: usize,
    pub codim_w_h: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharpReport {
    pub p: u64,
    pub d: usize,
    pub g_degree: usize,
    pub seed: u64,
    pub g: String,
    pub dim_w: usize,
    pub codim_w: u64,
    /// `h_d = codim W` is the plane-curve value for curve degree `m`.
    pub m: Option<usize>,
    pub green_bound: u64,
    pub samples: Vec<HyperplaneSample>,
}

impl CharpReport {
    /// `codim W = C(d+2,2) - 3` and every section has codimension `d - 1`.
    pub fn matches_prediction(&self) -> bool {
        let expected_w = binom_u64(self.d as u64 + 2, 2) - BigUint::from(3u32);
        BigUint::from(self.codim_w) == expected_w
            && self.samples.iter().all(|s| s.codim_w_h == self.d as u64 - 1)
    }
}

fn random_nonzero_form(p: u64, g_degree: usize, rng: &mut ChaCha8Rng) -> Poly {
    let basis = Monomial::all_of_degree(3, g_degree);
    loop {
        let mut g = Poly::zero(p);
        for m in &basis {
            let c = rng.gen_range(0..p);
            if c != 0 {
                g.add_term(m.clone(), Fp::new(c, p));
            }
        }
        if !g.is_zero() {
            return g;
        }
    }
}

/// Builds `W = span(x^p G, y^p G, z^p G)` over `F_p` for a random `G` of
/// degree `g_degree` and cuts it with `samples` random planes
/// `H = h1 x + h2 y + h3 z`, `h3 != 0` (redrawing any `H` that divides `G`).
pub fn charp_counterexample(
    p: u64,
    d: usize,
    g_degree: usize,
    seed: u64,
    samples: usize,
) -> Result<CharpReport> {
    if !is_prime(p) || p >= 1 << 16 {
        return Err(Error::InvalidChar(format!("{p} is not a small prime")));
    }
    if d != p as usize + g_degree {
        return Err(Error::OutOfRange(format!(
            "degree must be p + deg G = {}, got {d}",
            p as usize + g_degree
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = random_nonzero_form(p, g_degree, &mut rng);
    let spans: Vec<Poly> = (0..3)
        .map(|i| {
            let mut xp = Poly::zero(p);
            let mut e = vec![0; 3];
            e[i] = p as u32;
            xp.add_term(Monomial::new(e), Fp::new(1, p));
            xp.mul(&g)
        })
        .collect();
    let basis3 = Monomial::all_of_degree(3, d);
    let dim_w = Matrix::from_rows(spans.iter().map(|f| f.coordinates(&basis3)).collect()).rank_gauss();
    let codim_w = (basis3.len() - dim_w) as u64;

    let basis2 = Monomial::all_of_degree(2, d);
    let mut out = Vec::with_capacity(samples);
    while out.len() < samples {
        let h = [rng.gen_range(0..p), rng.gen_range(0..p), rng.gen_range(1..p)];
        let hf = h.map(|v| Fp::new(v, p));
        if g.restrict(hf).is_zero() {
            continue;
        }
        let rows: Vec<Vec<Fp>> = spans.iter().map(|f| f.restrict(hf).coordinates(&basis2)).collect();
        let dim_w_h = Matrix::from_rows(rows).rank_gauss();
        out.push(HyperplaneSample {
            h,
            dim_w_h,
            codim_w_h: (basis2.len() - dim_w_h) as u64,
        });
    }
    let h_d = BigUint::from(codim_w);
    Ok(CharpReport {
        p,
        d,
        g_degree,
        seed,
        g: g.to_string(),
        dim_w,
        codim_w,
        m: plane_curve_shape(&h_d, d),
        green_bound: green_bound(&h_d, d).try_into().expect("small"),
        samples: out,
    })
}
