//! Hypersurface pipeline: multiplication tables of the Jacobian algebra,
//! logarithmic vector fields, discriminant, bifurcation and Maxwell sets,
//! and the Hessian trace forms.

mod tables;
mod weights;

use std::sync::Arc;

use num_traits::One;
use rayon::prelude::*;

pub use tables::MulTables;
pub use weights::{derive_weights, WeightSystem};
pub(crate) use weights::solve_weights;

use crate::error::{Error, Result};
use crate::groebner::{ParamIdeal, QuotientAlgebra};
use crate::polyring::{discriminant, int, squarefree_core, Monomial, MonomialOrder, PolyMatrix, Polynomial, Rational, VarTable};

/// `F = f0 + sum_i s_i e_i`, with `s_0 = u` paired to `e_0 = 1`.
///
/// `values[i]` is what multiplies `e_i`: the parameter itself, or a
/// rational constant once the family has been specialized.
#[derive(Clone, Debug)]
pub struct DeformationSpec {
    vars: Arc<VarTable>,
    f0: Polynomial,
    basis: Vec<Monomial>,
    values: Vec<Polynomial>,
}

impl DeformationSpec {
    pub fn new(f0: Polynomial, basis: Vec<Polynomial>) -> Result<Self> {
        let vars = f0.vars().clone();
        if f0.terms().any(|(m, _)| m.exponents()[vars.n_x()..].iter().any(|&e| e > 0)) {
            return Err(Error::Input("f0 must not involve the parameters".into()));
        }
        if basis.len() != vars.n_s() {
            return Err(Error::Dimension(format!(
                "{} basis monomials but {} parameters",
                basis.len(),
                vars.n_s()
            )));
        }
        let mut monos = Vec::with_capacity(basis.len());
        for e in &basis {
            if !e.same_table(&f0) {
                return Err(Error::VarTableMismatch);
            }
            let mono = match e.terms().next() {
                Some((m, c)) if e.num_terms() == 1 && c.is_one() && !m.exponents()[vars.n_x()..].iter().any(|&x| x > 0) => m.clone(),
                _ => return Err(Error::Input(format!("basis element `{e}` is not a monomial in x"))),
            };
            monos.push(mono);
        }
        if monos.first().is_none_or(|m| !m.is_one()) {
            return Err(Error::Input("the first basis element must be 1".into()));
        }
        let values = (0..vars.n_s()).map(|j| Polynomial::var(&vars, vars.s_index(j))).collect();
        Ok(DeformationSpec { vars, f0, basis: monos, values })
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn f0(&self) -> &Polynomial {
        &self.f0
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn basis_polys(&self) -> Vec<Polynomial> {
        self.basis
            .iter()
            .map(|m| Polynomial::term(&self.vars, m.clone(), Rational::one()))
            .collect()
    }

    pub fn values(&self) -> &[Polynomial] {
        &self.values
    }

    /// Global index of `u`.
    pub fn u_index(&self) -> usize {
        self.vars.s_index(0)
    }

    pub fn deformation(&self) -> Polynomial {
        self.basis_polys()
            .iter()
            .zip(&self.values)
            .fold(self.f0.clone(), |acc, (e, s)| &acc + &(e * s))
    }

    pub fn jacobian_ideal(&self) -> Result<ParamIdeal> {
        let f = self.deformation();
        let gens: Vec<Polynomial> = (0..self.vars.n_x())
            .map(|p| f.derivative(p))
            .filter(|g| !g.is_zero())
            .collect();
        if gens.len() < self.vars.n_x() {
            return Err(Error::InfiniteQuotient("vanishing partial derivative".into()));
        }
        ParamIdeal::new(gens, MonomialOrder::DegRevLex)
    }

    /// Substitutes parameter values; unlisted parameters stay symbolic.
    pub fn specialize(&self, point: &[(usize, Rational)]) -> DeformationSpec {
        DeformationSpec {
            values: self.values.iter().map(|v| v.evaluate(point)).collect(),
            ..self.clone()
        }
    }

    pub fn is_specialized(&self) -> bool {
        self.values.iter().all(Polynomial::is_constant)
    }
}

/// `Sigma` (rows are logarithmic vector fields) and its determinant.
#[derive(Clone, Debug)]
pub struct LogMatrix {
    pub sigma: PolyMatrix,
    /// Rows are the coordinates of `F * e_i`.
    pub sigma0: PolyMatrix,
    /// Whether `sigma` comes from the weight formula (otherwise it equals
    /// `sigma0`).
    pub weighted: bool,
    pub discriminant: Polynomial,
}

impl LogMatrix {
    /// `v_i(Delta) / Delta` for every row `v_i = sum_l sigma_i^l d/ds_l`;
    /// fails if some row is not logarithmic along `Delta`.
    pub fn logarithmic_quotients(&self) -> Result<Vec<Polynomial>> {
        let vars = self.sigma.vars();
        let grads: Vec<Polynomial> = (0..vars.n_s())
            .map(|l| self.discriminant.derivative(vars.s_index(l)))
            .collect();
        (0..self.sigma.rows())
            .into_par_iter()
            .map(|i| {
                let v = self
                    .sigma
                    .row(i)
                    .iter()
                    .zip(&grads)
                    .fold(Polynomial::zero(vars), |acc, (s, g)| &acc + &(s * g));
                v.exact_divide(&self.discriminant)
            })
            .collect()
    }
}

/// Trace (Bezoutian) forms of the deformation.
#[derive(Clone, Debug)]
pub struct TraceForms {
    pub t: PolyMatrix,
    pub bf: PolyMatrix,
    /// Hessian determinant of `F` in `x`.
    pub h: Polynomial,
    pub hvec: Vec<Polynomial>,
    pub eta: Vec<Polynomial>,
    pub bh: PolyMatrix,
    pub bhf: PolyMatrix,
}

/// Bifurcation polynomial and the Maxwell candidate extracted from the
/// u-discriminant of `Delta`.
#[derive(Clone, Debug)]
pub struct MaxwellReport {
    pub bifurcation: Polynomial,
    pub u_discriminant: Polynomial,
    /// Squarefree core of the bifurcation polynomial.
    pub core: Polynomial,
    /// How many times `core` divides the u-discriminant.
    pub core_power: u32,
    /// Normalized cofactor: the Maxwell candidate.
    pub maxwell: Polynomial,
    /// Rational constant stripped from the cofactor.
    pub constant: Rational,
}

/// Jacobian algebra of a deformation together with its weights.
#[derive(Clone, Debug)]
pub struct Hypersurface {
    spec: DeformationSpec,
    weights: Option<WeightSystem>,
    algebra: QuotientAlgebra,
}

/// Everything the hypersurface pipeline produces.
#[derive(Clone, Debug)]
pub struct HyperResults {
    pub tables: MulTables,
    pub log: LogMatrix,
    pub forms: TraceForms,
}

impl Hypersurface {
    /// `weights`: explicit weights, or `None` to derive them; if `f0` is not
    /// quasihomogeneous the weighted `Sigma` is unavailable.
    pub fn new(spec: DeformationSpec, weights: Option<WeightSystem>) -> Result<Self> {
        let weights = match weights {
            Some(w) => Some(w),
            None => derive_weights(spec.f0()).ok(),
        }
        .map(|w| w.for_basis(spec.basis()));
        if let Some(w) = &weights {
            if w.x_weights.len() != spec.vars().n_x() {
                return Err(Error::Dimension("one weight per space variable expected".into()));
            }
            if spec.f0().weighted_degree(&w.full()) != Some(w.w_f) {
                return Err(Error::NotQuasihomogeneous(format!(
                    "f0 is not weighted homogeneous of degree {} for weights {:?}",
                    w.w_f, w.x_weights
                )));
            }
        }
        let algebra = QuotientAlgebra::new(&spec.jacobian_ideal()?, Some(spec.basis()))?;
        Ok(Hypersurface { spec, weights, algebra })
    }

    pub fn spec(&self) -> &DeformationSpec {
        &self.spec
    }

    pub fn weights(&self) -> Option<&WeightSystem> {
        self.weights.as_ref()
    }

    pub fn algebra(&self) -> &QuotientAlgebra {
        &self.algebra
    }

    pub fn mu(&self) -> usize {
        self.algebra.mu()
    }

    /// The same family at a parameter point (partial points allowed).
    pub fn specialize(&self, point: &[(usize, Rational)]) -> Result<Hypersurface> {
        Ok(Hypersurface {
            spec: self.spec.specialize(point),
            weights: self.weights.clone(),
            algebra: self.algebra.specialize(point)?,
        })
    }

    pub fn mul_tables(&self) -> Result<MulTables> {
        MulTables::compute(&self.algebra)
    }

    /// `sigma_i^l = sum_j w(s_j) s_j tau^l_{ij}`, checked against the
    /// coordinates of `F e_i` scaled by `w_f`.
    pub fn log_matrix(&self, tables: &MulTables) -> Result<LogMatrix> {
        let vars = self.spec.vars();
        let mu = self.mu();
        let f = self.spec.deformation();
        let basis = self.algebra.basis_polys();
        let rows0: Vec<Vec<Polynomial>> = basis
            .par_iter()
            .map(|e| self.algebra.coords(&(&f * e)))
            .collect::<Result<_>>()?;
        let sigma0 = PolyMatrix::from_rows(vars, rows0)?;
        let (sigma, weighted) = match &self.weights {
            Some(w) => {
                let ws: Vec<Polynomial> = self
                    .spec
                    .values()
                    .iter()
                    .zip(&w.s_weights)
                    .map(|(v, &k)| v.scale(&int(k)))
                    .collect();
                let sigma = PolyMatrix::from_fn(vars, mu, mu, |i, l| {
                    ws.iter()
                        .enumerate()
                        .fold(Polynomial::zero(vars), |acc, (j, c)| &acc + &(c * tables.tau[l].get(i, j)))
                });
                if sigma != sigma0.scale_rational(&int(w.w_f)) {
                    return Err(Error::NotQuasihomogeneous(
                        "weighted logarithmic matrix disagrees with the reduction of F*e_i".into(),
                    ));
                }
                (sigma, true)
            }
            None => (sigma0.clone(), false),
        };
        let discriminant = sigma.det_bareiss()?;
        Ok(LogMatrix { sigma, sigma0, weighted, discriminant })
    }

    pub fn hessian_det(&self) -> Result<Polynomial> {
        let f = self.spec.deformation();
        let n = self.spec.vars().n_x();
        PolyMatrix::from_fn(self.spec.vars(), n, n, |p, q| f.derivative(p).derivative(q)).det_bareiss()
    }

    pub fn trace_forms(&self, tables: &MulTables, log: &LogMatrix) -> Result<TraceForms> {
        let t = tables.trace_matrix()?;
        let bf = log.sigma.mul(&t)?;
        let h = self.hessian_det()?;
        let hvec = self.algebra.coords(&h)?;
        let eta = t.apply(&hvec)?;
        let bh = tables.combine(&eta)?;
        let bhf = log.sigma.mul(&bh)?;
        Ok(TraceForms { t, bf, h, hvec, eta, bh, bhf })
    }

    pub fn run(&self) -> Result<HyperResults> {
        let tables = self.mul_tables()?;
        let log = self.log_matrix(&tables)?;
        let forms = self.trace_forms(&tables, &log)?;
        Ok(HyperResults { tables, log, forms })
    }
}

/// `det T` and the Maxwell candidate: the u-discriminant of `Delta` with
/// every factor of `det T` divided out.
pub fn maxwell_bifurcation(delta: &Polynomial, t: &PolyMatrix, u: usize) -> Result<MaxwellReport> {
    let vars = delta.vars();
    let bifurcation = t.det_bareiss()?;
    let u_discriminant = if delta.degree_in(u) <= 1 {
        Polynomial::one(vars)
    } else {
        discriminant(delta, u)?
    };
    if u_discriminant.is_zero() {
        return Err(Error::Degenerate("u-discriminant vanishes identically".into()));
    }
    let core = if bifurcation.is_zero() {
        return Err(Error::Degenerate("bifurcation determinant vanishes identically".into()));
    } else {
        squarefree_core(&bifurcation)
    };
    let mut rest = u_discriminant.clone();
    let mut core_power = 0;
    if !core.is_constant() {
        while let Some(q) = rest.div_exact(&core)? {
            rest = q;
            core_power += 1;
        }
    }
    let (constant, maxwell) = rest.unit_normal();
    Ok(MaxwellReport {
        bifurcation,
        u_discriminant,
        core,
        core_power,
        maxwell,
        constant,
    })
}
