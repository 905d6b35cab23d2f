use std::fmt;

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// Square matrix with Laurent polynomial entries.
#[derive(Clone, PartialEq, Eq)]
pub struct RingMatrix {
    n: usize,
    entries: Vec<LaurentPoly>,
}

impl RingMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly) -> Result<RingMatrix> {
        if n == 0 {
            return Err(Error::Argument("matrix dimension must be at least 1".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Ok(RingMatrix { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<RingMatrix> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Argument("matrix is not square".into()));
        }
        RingMatrix::from_fn(n, |i, j| rows[i][j].clone())
    }

    pub fn identity(n: usize) -> Result<RingMatrix> {
        RingMatrix::from_fn(n, |i, j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.n + j]
    }

    pub fn mul(&self, other: &RingMatrix) -> Result<RingMatrix> {
        if self.n != other.n {
            return Err(Error::Argument("dimension mismatch".into()));
        }
        RingMatrix::from_fn(self.n, |i, j| {
            (0..self.n).map(|k| self.get(i, k) * other.get(k, j)).sum()
        })
    }

    /// Minor expansion memoized on column sets up to dimension 10, Bareiss
    /// elimination beyond. Symbolic entries make elimination blow up through
    /// its exact divisions, so the subset expansion is the default.
    pub fn determinant(&self) -> LaurentPoly {
        if self.n <= 10 {
            self.minor_expansion()
        } else {
            self.determinant_bareiss()
        }
    }

    fn minor_expansion(&self) -> LaurentPoly {
        let n = self.n;
        // minors[mask]: determinant of the bottom |mask| rows on columns `mask`
        let mut minors = vec![LaurentPoly::zero(); 1 << n];
        minors[0] = LaurentPoly::one();
        let mut masks: Vec<usize> = (1..1usize << n).collect();
        masks.sort_by_key(|m| m.count_ones());
        for mask in masks {
            let row = n - mask.count_ones() as usize;
            let mut acc = LaurentPoly::zero();
            let mut before = 0;
            for c in 0..n {
                if mask & (1 << c) == 0 {
                    continue;
                }
                let a = self.get(row, c);
                let rest = &minors[mask & !(1 << c)];
                if !a.is_zero() && !rest.is_zero() {
                    let term = a * rest;
                    if before % 2 == 0 {
                        acc += &term;
                    } else {
                        acc -= &term;
                    }
                }
                before += 1;
            }
            minors[mask] = acc;
        }
        std::mem::take(&mut minors[(1 << n) - 1])
    }

    /// Fraction-free elimination; each division is exact.
    pub fn determinant_bareiss(&self) -> LaurentPoly {
        let n = self.n;
        let mut m: Vec<Vec<LaurentPoly>> =
            (0..n).map(|i| (0..n).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut sign_flip = false;
        let mut prev = LaurentPoly::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign_flip = !sign_flip;
                    }
                    None => return LaurentPoly::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num
                        .exact_div(&prev)
                        .expect("fraction-free elimination divides exactly");
                }
                m[i][k] = LaurentPoly::zero();
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if sign_flip {
            -det
        } else {
            det
        }
    }
}

impl fmt::Debug for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        write!(f, "{rows:?}")
    }
}

/// Determinant of a square matrix.
pub fn determinant(m: &RingMatrix) -> LaurentPoly {
    m.determinant()
}
