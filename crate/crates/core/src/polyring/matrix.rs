use std::sync::Arc;

use rayon::prelude::*;

use super::poly::Polynomial;
use super::rational::Rational;
use super::vars::VarTable;
use crate::error::{Error, Result};

/// Dense matrix of polynomials over one variable table.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    vars: Arc<VarTable>,
    rows: usize,
    cols: usize,
    data: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(vars: &Arc<VarTable>, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            vars: vars.clone(),
            rows,
            cols,
            data: vec![Polynomial::zero(vars); rows * cols],
        }
    }

    pub fn identity(vars: &Arc<VarTable>, n: usize) -> Self {
        let mut m = Self::zeros(vars, n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one(vars));
        }
        m
    }

    pub fn from_rows(vars: &Arc<VarTable>, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let data: Vec<Polynomial> = rows.into_iter().flatten().collect();
        if data.iter().any(|p| !p.vars().as_ref().eq(vars.as_ref())) {
            return Err(Error::VarTableMismatch);
        }
        Ok(PolyMatrix {
            vars: vars.clone(),
            rows: r,
            cols: c,
            data,
        })
    }

    /// Builds a matrix cell by cell; cells are evaluated in parallel.
    pub fn from_fn<F>(vars: &Arc<VarTable>, rows: usize, cols: usize, f: F) -> Self
    where
        F: Fn(usize, usize) -> Polynomial + Sync,
    {
        let data = (0..rows * cols)
            .into_par_iter()
            .map(|k| f(k / cols.max(1), k % cols.max(1)))
            .collect();
        PolyMatrix {
            vars: vars.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.data[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = &Polynomial> {
        self.data.iter()
    }

    pub fn to_rows(&self) -> Vec<Vec<Polynomial>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial + Sync) -> PolyMatrix {
        PolyMatrix {
            vars: self.vars.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.par_iter().map(&f).collect(),
        }
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = PolyMatrix::zeros(&self.vars, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(PolyMatrix::from_fn(&self.vars, self.rows, other.cols, |i, j| {
            let mut acc = Polynomial::zero(&self.vars);
            for k in 0..self.cols {
                let a = self.get(i, k);
                let b = other.get(k, j);
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        }))
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension("cannot add matrices of different shapes".into()));
        }
        Ok(PolyMatrix::from_fn(&self.vars, self.rows, self.cols, |i, j| {
            self.get(i, j) + other.get(i, j)
        }))
    }

    pub fn scale(&self, c: &Polynomial) -> PolyMatrix {
        self.map(|p| p * c)
    }

    pub fn scale_rational(&self, c: &Rational) -> PolyMatrix {
        self.map(|p| p.scale(c))
    }

    pub fn evaluate(&self, assignment: &[(usize, Rational)]) -> PolyMatrix {
        self.map(|p| p.evaluate(assignment))
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>> {
        if v.len() != self.cols {
            return Err(Error::Dimension("vector length".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Polynomial::zero(&self.vars);
                for (k, vk) in v.iter().enumerate() {
                    acc = &acc + &(self.get(i, k) * vk);
                }
                acc
            })
            .collect())
    }

    /// Determinant by fraction-free (Bareiss) elimination with row pivoting.
    pub fn det_bareiss(&self) -> Result<Polynomial> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Polynomial::one(&self.vars));
        }
        let mut m = self.to_rows();
        let mut prev = Polynomial::one(&self.vars);
        let mut negate = false;
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(i, k);
                        negate = !negate;
                    }
                    None => return Ok(Polynomial::zero(&self.vars)),
                }
            }
            let (head, tail) = m.split_at_mut(k + 1);
            let pivot_row = &head[k];
            let pivot = &pivot_row[k];
            tail.par_iter_mut().for_each(|row| {
                let lead = row[k].clone();
                for j in k + 1..n {
                    let num = &(pivot * &row[j]) - &(&lead * &pivot_row[j]);
                    row[j] = if prev.is_one() {
                        num
                    } else {
                        num.exact_divide(&prev)
                            .expect("Bareiss quotient is exact")
                    };
                }
                row[k] = Polynomial::zero(&prev.vars().clone());
            });
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }
}

impl std::fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|p| p.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
