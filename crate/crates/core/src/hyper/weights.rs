use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::polyring::{Monomial, Polynomial, Rational};

/// Quasihomogeneous weights of the space variables, of the unfolded
/// function, and (once a basis is attached) of the deformation parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    pub x_weights: Vec<i64>,
    /// Weight of `f0` (for complete intersections: of `F_1`).
    pub w_f: i64,
    pub s_weights: Vec<i64>,
    /// Weights `w(f_q)` of the individual maps; `[w_f]` for hypersurfaces.
    pub map_weights: Vec<i64>,
}

impl WeightSystem {
    /// Weights of every variable in table order, x first.
    pub fn full(&self) -> Vec<i64> {
        self.x_weights.iter().chain(&self.s_weights).copied().collect()
    }

    /// Attaches `w(s_i) = w_f - wdeg(e_i)`.
    pub fn for_basis(&self, basis: &[Monomial]) -> WeightSystem {
        let mut w = self.x_weights.clone();
        w.resize(basis.first().map_or(w.len(), Monomial::len), 0);
        WeightSystem {
            s_weights: basis.iter().map(|m| self.w_f - m.weighted_degree(&w)).collect(),
            ..self.clone()
        }
    }

    /// Same weights multiplied by `k`.
    pub fn scaled(&self, k: i64) -> WeightSystem {
        let m = |v: &Vec<i64>| v.iter().map(|w| w * k).collect();
        WeightSystem {
            x_weights: m(&self.x_weights),
            w_f: self.w_f * k,
            s_weights: m(&self.s_weights),
            map_weights: m(&self.map_weights),
        }
    }
}

/// Smallest positive integer weights `w(x_p)`, `w_f` with every monomial of
/// `f0` of weighted degree `w_f`.
pub fn derive_weights(f0: &Polynomial) -> Result<WeightSystem> {
    if f0.is_zero() {
        return Err(Error::NotQuasihomogeneous("zero polynomial".into()));
    }
    if f0.terms().any(|(m, _)| m.exponents()[f0.vars().n_x()..].iter().any(|&e| e > 0)) {
        return Err(Error::NotQuasihomogeneous("f0 must not involve the parameters".into()));
    }
    let vars: Vec<usize> = (0..f0.vars().n_x()).collect();
    let (w, maps) = solve_weights(std::slice::from_ref(f0), &vars)?;
    Ok(WeightSystem {
        x_weights: w,
        w_f: maps[0],
        s_weights: Vec::new(),
        map_weights: maps,
    })
}

/// Solves for weights of the variables `vars` and for one weight per
/// polynomial such that each polynomial is weighted homogeneous. The
/// solution space must be a single ray in the positive orthant.
pub(crate) fn solve_weights(polys: &[Polynomial], vars: &[usize]) -> Result<(Vec<i64>, Vec<i64>)> {
    let nv = vars.len();
    let ncols = nv + polys.len();
    let mut rows: BTreeSet<Vec<i64>> = BTreeSet::new();
    for (q, p) in polys.iter().enumerate() {
        for (m, _) in p.terms() {
            let mut row: Vec<i64> = vars.iter().map(|&v| m.exp(v) as i64).collect();
            row.resize(ncols, 0);
            row[nv + q] = -1;
            let outside = (0..m.len()).any(|i| m.exp(i) > 0 && !vars.contains(&i));
            if outside {
                return Err(Error::NotQuasihomogeneous(format!(
                    "monomial outside the weighted variables in `{p}`"
                )));
            }
            rows.insert(row);
        }
    }
    let rows: Vec<Vec<Rational>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(|v| Rational::from_integer(v.into())).collect())
        .collect();
    let null = nullspace(rows, ncols);
    if null.len() != 1 {
        return Err(Error::NotQuasihomogeneous(format!(
            "weight equations have a {}-dimensional solution space",
            null.len()
        )));
    }
    let mut v = null.into_iter().next().unwrap();
    if v.iter().any(|q| q.is_negative()) {
        v.iter_mut().for_each(|q| *q = -q.clone());
    }
    if v.iter().any(|q| !q.is_positive()) {
        return Err(Error::NotQuasihomogeneous("no positive weight solution".into()));
    }
    let ints = primitive_integers(&v)?;
    Ok((ints[..nv].to_vec(), ints[nv..].to_vec()))
}

fn primitive_integers(v: &[Rational]) -> Result<Vec<i64>> {
    let lcm = v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let scaled: Vec<BigInt> = v.iter().map(|q| (q * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = scaled.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    scaled
        .iter()
        .map(|x| (x / &g).to_i64().ok_or_else(|| Error::NotQuasihomogeneous("weights overflow".into())))
        .collect()
}

/// Basis of the right nullspace of a rational matrix.
pub(crate) fn nullspace(mut rows: Vec<Vec<Rational>>, ncols: usize) -> Vec<Vec<Rational>> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        rows[r].iter_mut().for_each(|x| *x *= &inv);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for k in 0..ncols {
                    let delta = &f * &rows[r][k];
                    rows[i][k] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); ncols];
            v[free] = Rational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[i][free].clone();
            }
            v
        })
        .collect()
}
