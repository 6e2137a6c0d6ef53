//! Exact rank computation, generic over the scalar type.
//!
//! Integral domains use fraction-free (Bareiss) elimination, fields use
//! ordinary Gaussian elimination. Neither ever touches floating point.

use std::fmt::Debug;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Num;

use super::field::Fp;

/// Commutative ring operations on values that may carry runtime context
/// (such as a modulus), so constants are derived from an existing element.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
}

pub trait IntegralDomain: Ring {
    /// `self / o`, where the caller guarantees the division is exact.
    fn exact_div(&self, o: &Self) -> Self;
}

pub trait Field: Ring {
    fn inv(&self) -> Self;
}

impl<T: Num + Clone + Debug> Ring for T {
    fn zero_like(&self) -> Self {
        T::zero()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self.clone() + o.clone()
    }
    fn sub(&self, o: &Self) -> Self {
        self.clone() - o.clone()
    }
    fn mul(&self, o: &Self) -> Self {
        self.clone() * o.clone()
    }
}

impl<T: Num + Clone + Debug> IntegralDomain for T {
    fn exact_div(&self, o: &Self) -> Self {
        self.clone() / o.clone()
    }
}

impl<T: Integer + Clone + Debug> Field for Ratio<T> {
    fn inv(&self) -> Self {
        self.recip()
    }
}

impl Ring for Fp {
    fn zero_like(&self) -> Self {
        Fp::new(0, self.modulus())
    }
    fn is_zero(&self) -> bool {
        self.value() == 0
    }
    fn add(&self, o: &Self) -> Self {
        Fp::add(*self, *o)
    }
    fn sub(&self, o: &Self) -> Self {
        Fp::sub(*self, *o)
    }
    fn mul(&self, o: &Self) -> Self {
        Fp::mul(*self, *o)
    }
}

impl IntegralDomain for Fp {
    fn exact_div(&self, o: &Self) -> Self {
        Fp::mul(*self, Fp::inv(*o))
    }
}

impl Field for Fp {
    fn inv(&self) -> Self {
        Fp::inv(*self)
    }
}

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn filled(rows: usize, cols: usize, zero: T) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![zero; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn find_pivot(&self, from: usize, col: usize) -> Option<usize> {
        (from..self.rows).find(|&r| !self.get(r, col).is_zero())
    }
}

impl<T: IntegralDomain> Matrix<T> {
    /// Rank by fraction-free elimination: every intermediate entry is a
    /// minor of the input, and each division is exact.
    pub fn rank_fraction_free(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        let mut prev: Option<T> = None;
        for col in 0..m.cols {
            let Some(p) = m.find_pivot(rank, col) else {
                continue;
            };
            m.swap_rows(rank, p);
            let pivot = m.get(rank, col).clone();
            for r in rank + 1..m.rows {
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = pivot.mul(m.get(r, c)).sub(&factor.mul(m.get(rank, c)));
                    let v = match &prev {
                        Some(d) => v.exact_div(d),
                        None => v,
                    };
                    m.set(r, c, v);
                }
                // Columns left of `col` are already zero below the pivot row.
            }
            prev = Some(pivot);
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }
}

impl<T: Field> Matrix<T> {
    /// Rank by Gaussian elimination with exact inverses.
    pub fn rank_gauss(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(p) = m.find_pivot(rank, col) else {
                continue;
            };
            m.swap_rows(rank, p);
            let inv = m.get(rank, col).inv();
            for r in rank + 1..m.rows {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).mul(&inv);
                for c in col..m.cols {
                    let v = m.get(r, c).sub(&factor.mul(m.get(rank, c)));
                    m.set(r, c, v);
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }
}
