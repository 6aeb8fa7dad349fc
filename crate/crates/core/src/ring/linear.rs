use std::fmt;

use num_bigint::BigInt;

use super::{Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// An invertible `l x l` matrix acting on `S` by `x_i -> sum_j g[i][j] x_j`.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearChange<C> {
    rows: Vec<Vec<C>>,
}

impl<C: Scalar> LinearChange<C> {
    pub fn new(rows: Vec<Vec<C>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::SingularChange);
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: bad.len() });
        }
        let change = Self { rows };
        if change.determinant().is_zero() {
            return Err(Error::SingularChange);
        }
        Ok(change)
    }

    pub fn from_integers(rows: &[Vec<BigInt>]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(C::from_bigint).collect()).collect())
    }

    pub fn identity(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { C::one() } else { C::zero() }).collect())
            .collect();
        Self { rows }
    }

    /// Swaps `x_a` and `x_b`.
    pub fn transposition(dim: usize, a: usize, b: usize) -> Self {
        let mut change = Self::identity(dim);
        change.rows.swap(a, b);
        change
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<C>] {
        &self.rows
    }

    pub fn determinant(&self) -> C {
        let n = self.dim();
        let mut m = self.rows.clone();
        let mut det = C::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return C::zero();
            };
            if pivot != col {
                m.swap(pivot, col);
                det = -det;
            }
            let p = m[col][col].clone();
            det *= &p;
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = m[r][col].clone() / p.clone();
                for c in col..n {
                    let delta = factor.clone() * m[col][c].clone();
                    m[r][c] -= &delta;
                }
            }
        }
        det
    }

    /// Gauss-Jordan inverse; the matrix is invertible by construction.
    pub fn inverse(&self) -> Self {
        let n = self.dim();
        let mut m: Vec<Vec<C>> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = r.clone();
                row.extend((0..n).map(|j| if i == j { C::one() } else { C::zero() }));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[r][col].is_zero()).expect("invertible matrix");
            m.swap(pivot, col);
            let inv = C::one() / m[col][col].clone();
            for c in 0..2 * n {
                m[col][c] *= &inv;
            }
            for r in 0..n {
                if r == col || m[r][col].is_zero() {
                    continue;
                }
                let factor = m[r][col].clone();
                for c in 0..2 * n {
                    let delta = factor.clone() * m[col][c].clone();
                    m[r][c] -= &delta;
                }
            }
        }
        Self { rows: m.into_iter().map(|r| r[n..].to_vec()).collect() }
    }

    /// The linear form that `x_index` is sent to.
    pub fn image_of_variable(&self, index: usize) -> Polynomial<C> {
        let n = self.dim();
        Polynomial::from_terms(
            n,
            self.rows[index].iter().enumerate().map(|(j, c)| (c.clone(), Monomial::var(n, j))),
        )
        .expect("dimensions agree")
    }

    pub fn apply(&self, f: &Polynomial<C>) -> Result<Polynomial<C>> {
        f.apply_linear_change(self)
    }
}

impl<C: Scalar> fmt::Debug for LinearChange<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows.iter().map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>())).finish()
    }
}
