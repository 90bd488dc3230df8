use std::fmt;

use crate::error::{Error, Result};
use crate::exactpoly::{int, Poly, Rational};

/// A square matrix over `k[h]`. Rows are the coordinates of the images of
/// the basis vectors: `y.1_i = sum_j p_ij 1_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: Vec<Vec<Poly>>,
}

impl PolyMatrix {
    pub fn new(rows: Vec<Vec<Poly>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::SizeMismatch);
        }
        Ok(PolyMatrix { rows })
    }

    pub fn zero(n: usize) -> Self {
        PolyMatrix {
            rows: vec![vec![Poly::zero(); n]; n],
        }
    }

    /// `f(h) I`.
    pub fn scalar(n: usize, f: &Poly) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.rows[i][i] = f.clone();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Poly>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, f: Poly) {
        self.rows[i][j] = f;
    }

    /// Applies `f(h) -> f(h+s)` to every entry.
    pub fn shift(&self, s: i64) -> Self {
        self.map(|f| f.shift(&int(s)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|f| f.scale(c))
    }

    fn map<F: Fn(&Poly) -> Poly>(&self, f: F) -> Self {
        PolyMatrix {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
        }
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        let n = self.size();
        if other.size() != n {
            return Err(Error::SizeMismatch);
        }
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.rows[i][j] = (0..n)
                    .map(|k| &self.rows[i][k] * &other.rows[k][j])
                    .fold(Poly::zero(), |acc, t| &acc + &t);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if other.size() != self.size() {
            return Err(Error::SizeMismatch);
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
            .collect();
        Ok(PolyMatrix { rows })
    }

    /// Nested coefficient arrays, lowest degree first.
    pub fn coefficient_rows(&self) -> Vec<Vec<Vec<Rational>>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|f| f.coeffs().to_vec()).collect())
            .collect()
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|p| p.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// `Q(h-1) P(h) - P(h+1) Q(h) = g(h) I`.
pub fn verify_relations(p: &PolyMatrix, q: &PolyMatrix, g: &Poly) -> Result<bool> {
    if p.size() != q.size() {
        return Err(Error::SizeMismatch);
    }
    let lhs = q.shift(-1).mul(p)?.sub(&p.shift(1).mul(q)?)?;
    Ok(lhs == PolyMatrix::scalar(p.size(), g))
}

/// `(u(h) + C) I = P(h+1) Q(h)` and `(u(h-1) + C) I = Q(h-1) P(h)`.
pub fn verify_central(p: &PolyMatrix, q: &PolyMatrix, u: &Poly, c: &Rational) -> Result<bool> {
    if p.size() != q.size() {
        return Err(Error::SizeMismatch);
    }
    let n = p.size();
    let uc = u + &Poly::constant(c.clone());
    let xy = p.shift(1).mul(q)?;
    let yx = q.shift(-1).mul(p)?;
    Ok(xy == PolyMatrix::scalar(n, &uc) && yx == PolyMatrix::scalar(n, &uc.shift(&int(-1))))
}
