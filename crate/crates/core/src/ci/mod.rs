//! Complete intersections with a distinguished projection:
//! `(F_1 - u, F_2, ..., F_k)`. The quotient is taken by `F_2..F_k` and the
//! maximal minors of the Jacobian matrix; `P` records multiplication by
//! `F_1 - u`.

use std::sync::Arc;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::groebner::{ParamIdeal, QuotientAlgebra};
use crate::hyper::{solve_weights, MulTables, WeightSystem};
use crate::polyring::{int, Monomial, MonomialOrder, PolyMatrix, Polynomial, Rational, VarTable};

#[derive(Clone, Debug)]
pub struct CISpec {
    vars: Arc<VarTable>,
    maps: Vec<Polynomial>,
    /// The value standing in for `u`: the parameter itself or a constant.
    u_value: Polynomial,
}

impl CISpec {
    /// `maps = [F_1, ..., F_k]`; `u` is the first parameter and must not
    /// occur in any map.
    pub fn new(maps: Vec<Polynomial>) -> Result<Self> {
        let Some(first) = maps.first() else {
            return Err(Error::Input("at least one map is required".into()));
        };
        let vars = first.vars().clone();
        if vars.n_s() == 0 {
            return Err(Error::Input("the projection parameter u is missing".into()));
        }
        if maps.iter().any(|f| !f.same_table(first)) {
            return Err(Error::VarTableMismatch);
        }
        if maps.len() > vars.n_x() {
            return Err(Error::Dimension(format!(
                "{} maps in {} space variables",
                maps.len(),
                vars.n_x()
            )));
        }
        let u = vars.s_index(0);
        if maps.iter().any(|f| f.involves(u)) {
            return Err(Error::Input(format!("`{}` must not occur in the maps", vars.name(u))));
        }
        let u_value = Polynomial::var(&vars, u);
        Ok(CISpec { vars, maps, u_value })
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn maps(&self) -> &[Polynomial] {
        &self.maps
    }

    pub fn k(&self) -> usize {
        self.maps.len()
    }

    pub fn u_index(&self) -> usize {
        self.vars.s_index(0)
    }

    /// `F_1 - u`.
    pub fn projection(&self) -> Polynomial {
        &self.maps[0] - &self.u_value
    }

    pub fn specialize(&self, point: &[(usize, Rational)]) -> CISpec {
        CISpec {
            vars: self.vars.clone(),
            maps: self.maps.iter().map(|f| f.evaluate(point)).collect(),
            u_value: self.u_value.evaluate(point),
        }
    }

    /// Weights of all variables and maps, with `w(u) = w(f_1)`.
    pub fn derive_weights(&self) -> Result<WeightSystem> {
        let mut polys = vec![&self.maps[0] - &Polynomial::var(&self.vars, self.u_index())];
        polys.extend(self.maps[1..].iter().cloned());
        let all: Vec<usize> = (0..self.vars.len()).collect();
        let (w, maps) = solve_weights(&polys, &all)?;
        let nx = self.vars.n_x();
        Ok(WeightSystem {
            x_weights: w[..nx].to_vec(),
            w_f: maps[0],
            s_weights: w[nx..].to_vec(),
            map_weights: maps,
        })
    }
}

/// Maximal minors of the Jacobian and the ideal defining the critical
/// locus of the projection.
#[derive(Clone, Debug)]
pub struct MinorIdeal {
    /// In lexicographic order of the selected columns.
    pub minors: Vec<Polynomial>,
    pub combined: ParamIdeal,
}

pub fn minor_ideal(spec: &CISpec) -> Result<MinorIdeal> {
    let n = spec.vars.n_x();
    let k = spec.k();
    let jac: Vec<Vec<Polynomial>> = spec
        .maps
        .iter()
        .map(|f| (0..n).map(|p| f.derivative(p)).collect())
        .collect();
    let columns: Vec<Vec<usize>> = (0..n).combinations(k).collect();
    let minors: Vec<Polynomial> = columns
        .par_iter()
        .map(|cols| {
            PolyMatrix::from_fn(&spec.vars, k, k, |i, j| jac[i][cols[j]].clone()).det_bareiss()
        })
        .collect::<Result<_>>()?;
    let gens: Vec<Polynomial> = spec.maps[1..]
        .iter()
        .chain(&minors)
        .filter(|g| !g.is_zero())
        .cloned()
        .collect();
    if gens.is_empty() {
        return Err(Error::InfiniteQuotient("all minors vanish".into()));
    }
    let combined = ParamIdeal::new(gens, MonomialOrder::DegRevLex)?;
    Ok(MinorIdeal { minors, combined })
}

#[derive(Clone, Debug)]
pub struct CITables {
    /// `P = rho~(t) - u Id`: rows are coordinates of `(F_1 - u) phi_i`.
    pub p: PolyMatrix,
    /// Structure constants `w^l_{ij}`, and `zeta_c = tr(phi_c .)`.
    pub w: MulTables,
    pub t: PolyMatrix,
}

/// Quotient algebra of the critical locus together with the spec.
#[derive(Clone, Debug)]
pub struct CompleteIntersection {
    spec: CISpec,
    minors: MinorIdeal,
    algebra: QuotientAlgebra,
}

impl CompleteIntersection {
    pub fn new(spec: CISpec, basis_hint: Option<&[Monomial]>) -> Result<Self> {
        let minors = minor_ideal(&spec)?;
        let algebra = QuotientAlgebra::new(&minors.combined, basis_hint)?;
        Ok(CompleteIntersection { spec, minors, algebra })
    }

    pub fn spec(&self) -> &CISpec {
        &self.spec
    }

    pub fn minors(&self) -> &MinorIdeal {
        &self.minors
    }

    pub fn algebra(&self) -> &QuotientAlgebra {
        &self.algebra
    }

    pub fn mu(&self) -> usize {
        self.algebra.mu()
    }

    pub fn specialize(&self, point: &[(usize, Rational)]) -> Result<CompleteIntersection> {
        let spec = self.spec.specialize(point);
        let minors = minor_ideal(&spec)?;
        Ok(CompleteIntersection {
            spec,
            minors,
            algebra: self.algebra.specialize(point)?,
        })
    }

    pub fn tables(&self) -> Result<CITables> {
        let proj = self.spec.projection();
        let basis = self.algebra.basis_polys();
        let rows: Vec<Vec<Polynomial>> = basis
            .par_iter()
            .map(|phi| self.algebra.coords(&(&proj * phi)))
            .collect::<Result<_>>()?;
        let p = PolyMatrix::from_rows(&self.spec.vars, rows)?;
        let w = MulTables::compute(&self.algebra)?;
        let t = w.trace_matrix()?;
        Ok(CITables { p, w, t })
    }

    /// `(det P, det T)`.
    pub fn discriminant_and_bifurcation(&self, tables: &CITables) -> Result<(Polynomial, Polynomial)> {
        Ok((tables.p.det_bareiss()?, tables.t.det_bareiss()?))
    }

    /// Coefficient matrices `B_j` with entries
    /// `B_j(i,l) = trM0 * w^l_{ij} + R^l_{ij}`, where `R` are the
    /// coordinates of `sum_p d(phi_i phi_j w(x_p) x_p)/dx_p`.
    pub fn gm_coefficients(&self, tables: &CITables, ws: &WeightSystem) -> Result<GMCoefficients> {
        let vars = &self.spec.vars;
        let nx = vars.n_x();
        if ws.x_weights.len() != nx {
            return Err(Error::Dimension("one weight per space variable expected".into()));
        }
        let full = ws.full();
        for (q, f) in self.spec.maps.iter().enumerate() {
            let target = ws.map_weights.get(q).copied();
            let f = if q == 0 {
                &self.spec.maps[0] - &Polynomial::var(vars, self.spec.u_index())
            } else {
                f.clone()
            };
            if target.is_none() || f.weighted_degree(&full) != target {
                return Err(Error::NotQuasihomogeneous(format!("map {} is not weighted homogeneous", q + 1)));
            }
        }
        let mu = self.mu();
        let trm0: i64 = ws.map_weights.iter().sum();
        let trm0_q = int(trm0);
        let euler: Vec<Polynomial> = (0..nx)
            .map(|p| Polynomial::var(vars, p).scale(&int(ws.x_weights[p])))
            .collect();
        let basis = self.algebra.basis_polys();
        let cells: Vec<(usize, usize)> = (0..mu).flat_map(|i| (0..mu).map(move |j| (i, j))).collect();
        let r: Vec<Vec<Polynomial>> = cells
            .par_iter()
            .map(|&(i, j)| {
                let prod = &basis[i] * &basis[j];
                let div = (0..nx).fold(Polynomial::zero(vars), |acc, p| &acc + &(&prod * &euler[p]).derivative(p));
                self.algebra.coords(&div)
            })
            .collect::<Result<_>>()?;
        let r_at = |i: usize, j: usize| &r[i * mu + j];
        let b = (0..mu)
            .map(|j| {
                PolyMatrix::from_fn(vars, mu, mu, |i, l| {
                    &tables.w.tau[l].get(i, j).scale(&trm0_q) + &r_at(i, j)[l]
                })
            })
            .collect();
        let r = (0..mu)
            .map(|j| PolyMatrix::from_fn(vars, mu, mu, |i, l| r_at(i, j)[l].clone()))
            .collect();
        Ok(GMCoefficients {
            trm0,
            weights: ws.clone(),
            r,
            b,
        })
    }
}

#[derive(Clone, Debug)]
pub struct GMCoefficients {
    /// `sum_q w(f_q)` in the recorded integer weights.
    pub trm0: i64,
    pub weights: WeightSystem,
    /// `r[j](i,l) = R^l_{ij}`.
    pub r: Vec<PolyMatrix>,
    /// `b[j](i,l)`.
    pub b: Vec<PolyMatrix>,
}

impl GMCoefficients {
    pub fn weight_normalization(&self) -> String {
        format!(
            "integer weights x={:?} maps={:?}; divide by w(f_1)={} for the w(f_1)=1 normalization",
            self.weights.x_weights, self.weights.map_weights, self.weights.w_f
        )
    }
}
