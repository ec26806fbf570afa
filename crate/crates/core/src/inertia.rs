//! Exact inertia of symmetric rational matrices, and the signature
//! formulas for critical-point counts and Euler characteristics.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::polyring::{PolyMatrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymMatrixQ {
    n: usize,
    data: Vec<Rational>,
}

impl SymMatrixQ {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NonSquare {
                rows: n,
                cols: rows.first().map_or(0, Vec::len),
            });
        }
        let data: Vec<Rational> = rows.into_iter().flatten().collect();
        let m = SymMatrixQ { n, data };
        for i in 0..n {
            for j in 0..i {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::Asymmetric);
                }
            }
        }
        Ok(m)
    }

    /// From a polynomial matrix whose entries are all constants.
    pub fn from_poly_matrix(m: &PolyMatrix) -> Result<Self> {
        let rows = m
            .to_rows()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|p| {
                        p.constant_value()
                            .ok_or_else(|| Error::Input(format!("entry `{p}` is not a constant")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SymMatrixQ::new(rows)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.data.chunks(self.n.max(1)).map(<[Rational]>::to_vec).collect()
    }

    pub fn neg(&self) -> SymMatrixQ {
        SymMatrixQ {
            n: self.n,
            data: self.data.iter().map(|q| -q).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> SymMatrixQ {
        SymMatrixQ {
            n: self.n,
            data: self.data.iter().map(|q| q * c).collect(),
        }
    }

    /// `Q^T A Q` for a square `Q` of the same size.
    pub fn congruence(&self, q: &[Vec<Rational>]) -> Result<SymMatrixQ> {
        let n = self.n;
        if q.len() != n || q.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("congruence matrix must match the size".into()));
        }
        let mut aq = vec![Rational::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                aq[i * n + j] = (0..n).map(|k| self.get(i, k) * &q[k][j]).sum();
            }
        }
        let rows = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| &q[k][i] * &aq[k * n + j]).sum()).collect())
            .collect();
        SymMatrixQ::new(rows)
    }

    pub fn block_diag(&self, other: &SymMatrixQ) -> SymMatrixQ {
        let n = self.n + other.n;
        let mut data = vec![Rational::zero(); n * n];
        for i in 0..self.n {
            for j in 0..self.n {
                data[i * n + j] = self.get(i, j).clone();
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                data[(self.n + i) * n + self.n + j] = other.get(i, j).clone();
            }
        }
        SymMatrixQ { n, data }
    }

    /// Coefficients of `det(lambda I - A)`, highest degree first, by
    /// Berkowitz's division-free recursion.
    pub fn charpoly(&self) -> Vec<Rational> {
        let n = self.n;
        if n == 0 {
            return vec![Rational::from_integer(1.into())];
        }
        let one = Rational::from_integer(1.into());
        let mut v = vec![one.clone(), -self.get(0, 0).clone()];
        for r in 1..n {
            // Leading r x r block A, column C above and row R left of a_rr.
            let col: Vec<Rational> = (0..r).map(|i| self.get(i, r).clone()).collect();
            let row: Vec<Rational> = (0..r).map(|j| self.get(r, j).clone()).collect();
            let mut t = Vec::with_capacity(r + 2);
            t.push(one.clone());
            t.push(-self.get(r, r).clone());
            let mut ak = col;
            for _ in 0..r {
                t.push(-row.iter().zip(&ak).map(|(a, b)| a * b).sum::<Rational>());
                ak = (0..r).map(|i| (0..r).map(|j| self.get(i, j) * &ak[j]).sum()).collect();
            }
            v = (0..r + 2)
                .map(|i| (0..=i.min(r)).map(|j| &t[i - j] * &v[j]).sum())
                .collect();
        }
        v
    }

    /// Inertia via Descartes' rule on `p(lambda)` and `p(-lambda)`, exact
    /// since the characteristic polynomial of a symmetric matrix is
    /// real-rooted.
    pub fn inertia(&self) -> InertiaTriple {
        let mut p = self.charpoly();
        let mut n_zero = 0;
        while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
            p.pop();
            n_zero += 1;
        }
        let deg = p.len() - 1;
        let n_plus = sign_changes(p.iter().cloned());
        let n_minus = sign_changes(
            p.iter()
                .enumerate()
                .map(|(i, c)| if (deg - i) % 2 == 1 { -c.clone() } else { c.clone() }),
        );
        InertiaTriple { n_plus, n_minus, n_zero }
    }
}

fn sign_changes(it: impl Iterator<Item = Rational>) -> usize {
    let mut last: Option<bool> = None;
    let mut changes = 0;
    for c in it.filter(|c| !c.is_zero()) {
        let pos = c.is_positive();
        if last.is_some_and(|l| l != pos) {
            changes += 1;
        }
        last = Some(pos);
    }
    changes
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InertiaTriple {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl InertiaTriple {
    pub fn signature(&self) -> i64 {
        self.n_plus as i64 - self.n_minus as i64
    }

    pub fn size(&self) -> usize {
        self.n_plus + self.n_minus + self.n_zero
    }

    pub fn is_degenerate(&self) -> bool {
        self.n_zero > 0
    }
}

/// Signed count of real critical points: those with positive critical
/// value minus those with negative critical value.
pub fn critical_count(sigma_t: &SymMatrixQ) -> Result<i64> {
    let inertia = sigma_t.inertia();
    if inertia.is_degenerate() {
        return Err(Error::Degenerate(format!(
            "trace form is singular (n_zero = {}); the point lies on the discriminant",
            inertia.n_zero
        )));
    }
    Ok(inertia.signature())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiReport {
    pub chi_ge: i64,
    pub chi_le: i64,
    pub chi_eq: i64,
    pub sign_bh: i64,
    pub sign_bhf: i64,
    /// `chi_ge - chi_eq` and `chi_le - chi_eq` as given by the signatures.
    pub diff_ge: i64,
    pub diff_le: i64,
}

/// Euler characteristics of `{F >= 0}`, `{F <= 0}`, `{F = 0}` in a ball
/// containing all real critical points, with `F != 0` on its boundary.
/// The signatures give the two differences against `chi_eq`; additivity
/// `chi_ge + chi_le - chi_eq = 1` closes the system.
pub fn euler_characteristics(bh: &SymMatrixQ, bhf: &SymMatrixQ, n: usize) -> Result<ChiReport> {
    let ih = bh.inertia();
    let ihf = bhf.inertia();
    if ih.is_degenerate() || ihf.is_degenerate() {
        return Err(Error::Degenerate(format!(
            "singular Hessian trace form (n_zero: B^H {}, B^HF {})",
            ih.n_zero, ihf.n_zero
        )));
    }
    let (sh, shf) = (ih.signature(), ihf.signature());
    if (sh + shf) % 2 != 0 {
        return Err(Error::Parity(format!("sign(B^H) = {sh}, sign(B^HF) = {shf}")));
    }
    let diff_ge = (sh + shf) / 2;
    let diff_le = if n % 2 == 0 { 1 } else { -1 } * (sh - shf) / 2;
    let chi_eq = 1 - diff_ge - diff_le;
    Ok(ChiReport {
        chi_ge: chi_eq + diff_ge,
        chi_le: chi_eq + diff_le,
        chi_eq,
        sign_bh: sh,
        sign_bhf: shf,
        diff_ge,
        diff_le,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::int;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> SymMatrixQ {
        SymMatrixQ::new(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn small_inertias() {
        let d = m(&[&[2, 0, 0], &[0, -3, 0], &[0, 0, 0]]);
        assert_eq!(d.inertia(), InertiaTriple { n_plus: 1, n_minus: 1, n_zero: 1 });
        let id = m(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(id.inertia(), InertiaTriple { n_plus: 4, n_minus: 0, n_zero: 0 });
        // Eigenvalues 3 and -1.
        assert_eq!(m(&[&[1, 2], &[2, 1]]).inertia().signature(), 0);
    }

    #[test]
    fn charpoly_matches_expansion() {
        // det(l I - A) for A = [[2,1,0],[1,3,1],[0,1,4]] is
        // l^3 - 9 l^2 + 24 l - 18.
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(a.charpoly(), [1, -9, 24, -18].map(int));
    }

    #[test]
    fn asymmetric_rejected() {
        let r = SymMatrixQ::new(vec![vec![int(1), int(2)], vec![int(3), int(1)]]);
        assert_eq!(r.unwrap_err(), Error::Asymmetric);
    }

    #[test]
    fn morse_a1() {
        assert_eq!(critical_count(&m(&[&[2]])).unwrap(), 1);
        assert_eq!(critical_count(&m(&[&[-2]])).unwrap(), -1);
        assert!(matches!(critical_count(&m(&[&[0]])), Err(Error::Degenerate(_))));
    }

    #[test]
    fn parity_violation_reported() {
        let r = euler_characteristics(&m(&[&[1]]), &m(&[&[1, 0], &[0, 1]]), 1);
        assert!(matches!(r, Err(Error::Parity(_))));
    }

    fn sym(n: usize) -> impl Strategy<Value = SymMatrixQ> {
        proptest::collection::vec(-5i64..=5, n * n).prop_map(move |v| {
            let rows = (0..n)
                .map(|i| (0..n).map(|j| int(v[i.min(j) * n + i.max(j)])).collect())
                .collect();
            SymMatrixQ::new(rows).unwrap()
        })
    }

    /// Upper unitriangular times a signed permutation: unimodular.
    fn unimodular(n: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
        (proptest::collection::vec(-3i64..=3, n * n), Just(n)).prop_map(|(v, n)| {
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| match i.cmp(&j) {
                            std::cmp::Ordering::Equal => int(if v[i * n + j] < 0 { -1 } else { 1 }),
                            std::cmp::Ordering::Less => int(v[i * n + j]),
                            std::cmp::Ordering::Greater => int(0),
                        })
                        .collect()
                })
                .collect()
        })
    }

    proptest! {
        #[test]
        fn sylvester_invariance(a in sym(4), q in unimodular(4)) {
            prop_assert_eq!(a.congruence(&q).unwrap().inertia(), a.inertia());
        }

        #[test]
        fn negation_swaps(a in sym(5)) {
            let i = a.inertia();
            let j = a.neg().inertia();
            prop_assert_eq!((i.n_plus, i.n_minus, i.n_zero), (j.n_minus, j.n_plus, j.n_zero));
        }

        #[test]
        fn blocks_add(a in sym(3), b in sym(2)) {
            let (i, j, k) = (a.inertia(), b.inertia(), a.block_diag(&b).inertia());
            prop_assert_eq!(k.n_plus, i.n_plus + j.n_plus);
            prop_assert_eq!(k.n_minus, i.n_minus + j.n_minus);
            prop_assert_eq!(k.n_zero, i.n_zero + j.n_zero);
        }

        #[test]
        fn positive_scaling(a in sym(4), num in 1i64..50, den in 1i64..50) {
            let c = Rational::new(num.into(), den.into());
            prop_assert_eq!(a.scale(&c).inertia(), a.inertia());
        }

        #[test]
        fn size_accounted(a in sym(6)) {
            prop_assert_eq!(a.inertia().size(), 6);
        }
    }
}
