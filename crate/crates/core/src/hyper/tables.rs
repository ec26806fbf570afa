use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::groebner::QuotientAlgebra;
use crate::polyring::{PolyMatrix, Polynomial};

/// Structure constants of a quotient algebra: `e_i e_j = sum_l tau[l](i,j) e_l`.
#[derive(Clone, Debug)]
pub struct MulTables {
    pub tau: Vec<PolyMatrix>,
    /// `zeta[r]` is the trace of multiplication by `e_r`.
    pub zeta: Vec<Polynomial>,
}

impl MulTables {
    pub fn compute(alg: &QuotientAlgebra) -> Result<MulTables> {
        let mu = alg.mu();
        let basis = alg.basis_polys();
        let cells: Vec<(usize, usize)> = (0..mu).flat_map(|i| (i..mu).map(move |j| (i, j))).collect();
        let prods: Vec<Vec<Polynomial>> = cells
            .par_iter()
            .map(|&(i, j)| alg.coords(&(&basis[i] * &basis[j])))
            .collect::<Result<_>>()?;
        let vars = alg.vars();
        let mut tau = vec![PolyMatrix::zeros(vars, mu, mu); mu];
        for (&(i, j), coords) in cells.iter().zip(prods) {
            for (l, c) in coords.into_iter().enumerate() {
                tau[l].set(i, j, c.clone());
                tau[l].set(j, i, c);
            }
        }
        let zeta = (0..mu)
            .map(|r| (0..mu).fold(Polynomial::zero(vars), |acc, l| &acc + tau[l].get(r, l)))
            .collect();
        Ok(MulTables { tau, zeta })
    }

    pub fn mu(&self) -> usize {
        self.tau.len()
    }

    /// `sum_l c[l] * tau[l]`.
    pub fn combine(&self, c: &[Polynomial]) -> Result<PolyMatrix> {
        if c.len() != self.mu() {
            return Err(Error::Dimension(format!("expected {} coefficients, got {}", self.mu(), c.len())));
        }
        let mu = self.mu();
        Ok(PolyMatrix::from_fn(self.tau[0].vars(), mu, mu, |i, j| {
            c.iter()
                .zip(&self.tau)
                .filter(|(k, _)| !k.is_zero())
                .fold(Polynomial::zero(self.tau[0].vars()), |acc, (k, t)| &acc + &(k * t.get(i, j)))
        }))
    }

    /// The trace form `T = sum_r zeta_r tau^r`.
    pub fn trace_matrix(&self) -> Result<PolyMatrix> {
        self.combine(&self.zeta)
    }
}
