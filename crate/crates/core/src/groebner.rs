//! Buchberger bases over the parameter ring and normal forms.
//!
//! Ideals live in the space variables `x`; coefficients are polynomials in
//! the parameters `s`. Reduction is pseudo-reduction: whenever a leading
//! coefficient is a nonconstant parameter polynomial the running remainder
//! is multiplied by it instead of dividing, so every stored quantity stays
//! polynomial in `s`. The accumulated multiplier is reported as the
//! certificate's `scale`.

use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::polyring::{gcd, Monomial, MonomialOrder, Polynomial, PolyMatrix, Rational, VarTable};

type XMono = Vec<u32>;

/// A polynomial in `x` whose coefficients are parameter polynomials,
/// terms sorted in descending `order`.
#[derive(Clone, Debug)]
struct XPoly {
    terms: Vec<(XMono, Polynomial)>,
}

impl XPoly {
    fn empty() -> Self {
        XPoly { terms: Vec::new() }
    }

    fn from_poly(p: &Polynomial, order: MonomialOrder) -> Self {
        let nx = p.vars().n_x();
        let vars = p.vars();
        let mut groups: std::collections::HashMap<XMono, Polynomial> = Default::default();
        for (m, c) in p.terms() {
            let xm: XMono = m.exponents()[..nx].to_vec();
            let mut sm = m.clone();
            for i in 0..nx {
                sm.set_exp(i, 0);
            }
            groups
                .entry(xm)
                .or_insert_with(|| Polynomial::zero(vars))
                .add_term(sm, c.clone());
        }
        let mut terms: Vec<_> = groups.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        XPoly { terms }
    }

    fn to_poly(&self, vars: &Arc<VarTable>) -> Polynomial {
        let mut out = Polynomial::zero(vars);
        for (xm, c) in &self.terms {
            let mut full = vec![0u32; vars.len()];
            full[..xm.len()].copy_from_slice(xm);
            let shift = Monomial::from_exponents(&full);
            for (m, v) in c.terms() {
                out.add_term(m.mul(&shift), v.clone());
            }
        }
        out
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &(XMono, Polynomial) {
        &self.terms[0]
    }

    fn scale(&self, a: &Polynomial) -> XPoly {
        if a.is_one() {
            return self.clone();
        }
        XPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * a)).collect(),
        }
    }

    /// `a*self - b*m*g`, merged in order.
    fn axpy(&self, a: &Polynomial, b: &Polynomial, m: &[u32], g: &XPoly, order: MonomialOrder) -> XPoly {
        let shifted: Vec<(XMono, Polynomial)> = g
            .terms
            .iter()
            .map(|(gm, gc)| (gm.iter().zip(m).map(|(x, y)| x + y).collect(), -(gc * b)))
            .collect();
        let mut out = Vec::with_capacity(self.terms.len() + shifted.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < shifted.len() {
            let take = if i == self.terms.len() {
                Ordering::Less
            } else if j == shifted.len() {
                Ordering::Greater
            } else {
                order.cmp(&self.terms[i].0, &shifted[j].0)
            };
            match take {
                Ordering::Greater => {
                    let (m, c) = &self.terms[i];
                    out.push((m.clone(), if a.is_one() { c.clone() } else { c * a }));
                    i += 1;
                }
                Ordering::Less => {
                    out.push(shifted[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let (m, c) = &self.terms[i];
                    let lhs = if a.is_one() { c.clone() } else { c * a };
                    let sum = &lhs + &shifted[j].1;
                    if !sum.is_zero() {
                        out.push((m.clone(), sum));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        XPoly { terms: out }
    }

    fn add_term(&mut self, m: XMono, c: Polynomial, order: MonomialOrder) {
        match self.terms.binary_search_by(|(k, _)| order.cmp(&m, k)) {
            Ok(pos) => {
                let sum = &self.terms[pos].1 + &c;
                if sum.is_zero() {
                    self.terms.remove(pos);
                } else {
                    self.terms[pos].1 = sum;
                }
            }
            Err(pos) => self.terms.insert(pos, (m, c)),
        }
    }

    /// Gcd of all coefficients.
    fn content(&self, vars: &Arc<VarTable>) -> Polynomial {
        let mut g = Polynomial::zero(vars);
        for (_, c) in &self.terms {
            if c.is_constant() {
                return Polynomial::one(vars);
            }
        }
        for (_, c) in &self.terms {
            g = gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Removes the parameter content and scales so that the leading
    /// coefficient has leading rational coefficient 1.
    fn normalize(&self, vars: &Arc<VarTable>) -> XPoly {
        if self.is_zero() {
            return self.clone();
        }
        let content = self.content(vars);
        let mut out = if content.is_constant() {
            self.clone()
        } else {
            XPoly {
                terms: self
                    .terms
                    .iter()
                    .map(|(m, c)| (m.clone(), c.exact_divide(&content).expect("content divides")))
                    .collect(),
            }
        };
        let lead = out.lead().1.leading_coefficient();
        if !lead.is_one() {
            let inv = lead.recip();
            for (_, c) in out.terms.iter_mut() {
                *c = c.scale(&inv);
            }
        }
        out
    }
}

fn x_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn x_quotient(a: &[u32], b: &[u32]) -> XMono {
    b.iter().zip(a).map(|(x, y)| x - y).collect()
}

fn x_lcm(a: &[u32], b: &[u32]) -> XMono {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Ideal in the space variables with parameter-polynomial coefficients.
#[derive(Clone, Debug)]
pub struct ParamIdeal {
    generators: Vec<Polynomial>,
    order: MonomialOrder,
}

impl ParamIdeal {
    pub fn new(generators: Vec<Polynomial>, order: MonomialOrder) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Input("ideal needs at least one generator".into()));
        }
        if generators.iter().any(|g| g.is_zero()) {
            return Err(Error::Input("zero generator".into()));
        }
        if generators.iter().any(|g| !g.same_table(&generators[0])) {
            return Err(Error::VarTableMismatch);
        }
        if let Some(g) = generators.iter().find(|g| !g.involves_x() && !g.is_constant()) {
            return Err(Error::Input(format!("generator `{g}` is free of the space variables")));
        }
        Ok(ParamIdeal { generators, order })
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        self.generators[0].vars()
    }
}

/// Reduced Gröbner basis over the fraction field of the parameter ring.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    vars: Arc<VarTable>,
    order: MonomialOrder,
    elements: Vec<XPoly>,
    source: ParamIdeal,
}

/// `scale * input = sum(cofactors[g] * g) + remainder`, with the remainder
/// supported on standard monomials.
#[derive(Clone, Debug)]
pub struct ReductionCertificate {
    pub remainder: Polynomial,
    pub cofactors: Vec<Polynomial>,
    pub scale: Polynomial,
}

fn reduce(
    p: &XPoly,
    basis: &[XPoly],
    order: MonomialOrder,
    vars: &Arc<VarTable>,
    track: bool,
) -> (XPoly, Vec<XPoly>, Polynomial) {
    let mut cur = p.clone();
    let mut rem = XPoly::empty();
    let mut cof = vec![XPoly::empty(); if track { basis.len() } else { 0 }];
    let mut scale = Polynomial::one(vars);
    while !cur.is_zero() {
        let (xm, c) = cur.lead().clone();
        let hit = basis
            .iter()
            .position(|g| x_divides(&g.lead().0, &xm));
        let Some(gi) = hit else {
            cur.terms.remove(0);
            rem.terms.push((xm, c));
            continue;
        };
        let g = &basis[gi];
        let lc = &g.lead().1;
        let shift = x_quotient(&g.lead().0, &xm);
        if let Some(k) = lc.constant_value() {
            let q = c.scale(&k.recip());
            cur = cur.axpy(&Polynomial::one(vars), &q, &shift, g, order);
            if track {
                cof[gi].add_term(shift, q, order);
            }
        } else {
            let h = gcd(lc, &c);
            let a = lc.exact_divide(&h).expect("gcd divides");
            let b = c.exact_divide(&h).expect("gcd divides");
            cur = cur.axpy(&a, &b, &shift, g, order);
            rem = rem.scale(&a);
            if track {
                for f in cof.iter_mut() {
                    *f = f.scale(&a);
                }
                cof[gi].add_term(shift, b, order);
            }
            scale = &scale * &a;
        }
    }
    (rem, cof, scale)
}

fn spoly(f: &XPoly, g: &XPoly, order: MonomialOrder) -> XPoly {
    let l = x_lcm(&f.lead().0, &g.lead().0);
    let (fl, gl) = (&f.lead().1, &g.lead().1);
    let h = gcd(fl, gl);
    let a = gl.exact_divide(&h).expect("gcd divides");
    let b = fl.exact_divide(&h).expect("gcd divides");
    let sf = x_quotient(&f.lead().0, &l);
    let sg = x_quotient(&g.lead().0, &l);
    let fs = XPoly {
        terms: f
            .terms
            .iter()
            .map(|(m, c)| (m.iter().zip(&sf).map(|(x, y)| x + y).collect(), c.clone()))
            .collect(),
    };
    fs.axpy(&a, &b, &sg, g, order)
}

impl GroebnerBasis {
    /// Buchberger's algorithm with the normal selection strategy and both of
    /// Buchberger's criteria, followed by interreduction.
    pub fn compute(ideal: &ParamIdeal) -> GroebnerBasis {
        let order = ideal.order;
        let vars = ideal.vars().clone();
        let mut basis: Vec<XPoly> = ideal
            .generators
            .iter()
            .map(|g| XPoly::from_poly(g, order).normalize(&vars))
            .collect();
        // A nonzero constant generator makes the ideal the unit ideal.
        if let Some(unit) = basis.iter().find(|g| g.lead().0.iter().all(|&e| e == 0)) {
            let unit = unit.clone();
            return GroebnerBasis {
                vars,
                order,
                elements: vec![unit],
                source: ideal.clone(),
            };
        }
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for j in 0..basis.len() {
            for i in 0..j {
                pairs.push((i, j));
            }
        }
        let mut done: std::collections::HashSet<(usize, usize)> = Default::default();
        while !pairs.is_empty() {
            let pick = (0..pairs.len())
                .min_by(|&a, &b| {
                    let la = x_lcm(&basis[pairs[a].0].lead().0, &basis[pairs[a].1].lead().0);
                    let lb = x_lcm(&basis[pairs[b].0].lead().0, &basis[pairs[b].1].lead().0);
                    la.iter()
                        .sum::<u32>()
                        .cmp(&lb.iter().sum::<u32>())
                        .then_with(|| order.cmp(&la, &lb))
                        .then_with(|| pairs[a].cmp(&pairs[b]))
                })
                .unwrap();
            let (i, j) = pairs.remove(pick);
            done.insert((i, j));
            let (li, lj) = (&basis[i].lead().0, &basis[j].lead().0);
            if li.iter().zip(lj).all(|(a, b)| *a == 0 || *b == 0) {
                continue;
            }
            let l = x_lcm(li, lj);
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && x_divides(&basis[k].lead().0, &l)
                    && done.contains(&(i.min(k), i.max(k)))
                    && done.contains(&(j.min(k), j.max(k)))
            });
            if chain {
                continue;
            }
            let s = spoly(&basis[i], &basis[j], order);
            let (r, _, _) = reduce(&s, &basis, order, &vars, false);
            if r.is_zero() {
                continue;
            }
            let r = r.normalize(&vars);
            if r.lead().0.iter().all(|&e| e == 0) {
                return GroebnerBasis {
                    vars,
                    order,
                    elements: vec![r],
                    source: ideal.clone(),
                };
            }
            let n = basis.len();
            basis.push(r);
            for k in 0..n {
                pairs.push((k, n));
            }
        }
        // Minimalize: drop elements whose leading monomial is divisible by
        // another one's.
        let mut keep: Vec<XPoly> = Vec::new();
        for (idx, g) in basis.iter().enumerate() {
            let redundant = basis.iter().enumerate().any(|(k, h)| {
                k != idx
                    && x_divides(&h.lead().0, &g.lead().0)
                    && (h.lead().0 != g.lead().0 || k < idx)
            });
            if !redundant {
                keep.push(g.clone());
            }
        }
        for idx in 0..keep.len() {
            let others: Vec<XPoly> = keep
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != idx)
                .map(|(_, g)| g.clone())
                .collect();
            let (r, _, _) = reduce(&keep[idx], &others, order, &vars, false);
            keep[idx] = r.normalize(&vars);
        }
        keep.sort_by(|a, b| order.cmp(&a.lead().0, &b.lead().0));
        GroebnerBasis {
            vars,
            order,
            elements: keep,
            source: ideal.clone(),
        }
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn source(&self) -> &ParamIdeal {
        &self.source
    }

    pub fn elements(&self) -> Vec<Polynomial> {
        self.elements.iter().map(|g| g.to_poly(&self.vars)).collect()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Leading x-monomials, as full-length monomials.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| self.full_monomial(&g.lead().0))
            .collect()
    }

    /// Leading parameter coefficients; a specialization that zeroes one of
    /// these invalidates the basis.
    pub fn leading_coefficients(&self) -> Vec<Polynomial> {
        self.elements.iter().map(|g| g.lead().1.clone()).collect()
    }

    fn full_monomial(&self, xm: &[u32]) -> Monomial {
        let mut full = vec![0u32; self.vars.len()];
        full[..xm.len()].copy_from_slice(xm);
        Monomial::from_exponents(&full)
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].lead().0.iter().all(|&e| e == 0)
    }

    /// Every S-polynomial pseudo-reduces to zero.
    pub fn is_groebner(&self) -> bool {
        for j in 0..self.elements.len() {
            for i in 0..j {
                let s = spoly(&self.elements[i], &self.elements[j], self.order);
                let (r, _, _) = reduce(&s, &self.elements, self.order, &self.vars, false);
                if !r.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Extended normal form with a membership certificate.
    pub fn normal_form(&self, p: &Polynomial) -> Result<ReductionCertificate> {
        if !p.same_table(&Polynomial::zero(&self.vars)) {
            return Err(Error::VarTableMismatch);
        }
        let xp = XPoly::from_poly(p, self.order);
        let (rem, cof, scale) = reduce(&xp, &self.elements, self.order, &self.vars, true);
        Ok(ReductionCertificate {
            remainder: rem.to_poly(&self.vars),
            cofactors: cof.iter().map(|c| c.to_poly(&self.vars)).collect(),
            scale,
        })
    }

    /// Normal form with the scale divided out; fails if the scale is a
    /// nonconstant parameter polynomial.
    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial> {
        let xp = XPoly::from_poly(p, self.order);
        let (rem, _, scale) = reduce(&xp, &self.elements, self.order, &self.vars, false);
        let rem = rem.to_poly(&self.vars);
        match scale.constant_value() {
            Some(k) => Ok(if k.is_one() { rem } else { rem.scale(&k.recip()) }),
            None => Err(Error::NonconstantScale(scale.to_string())),
        }
    }

    /// Basis for a parameter specialization. Evaluates the stored basis
    /// when every leading coefficient survives, otherwise recomputes from
    /// the specialized generators.
    pub fn specialize(&self, point: &[(usize, Rational)]) -> GroebnerBasis {
        let safe = self
            .leading_coefficients()
            .iter()
            .all(|c| !c.evaluate(point).is_zero());
        if safe {
            let elements = self
                .elements
                .iter()
                .map(|g| {
                    XPoly::from_poly(&g.to_poly(&self.vars).evaluate(point), self.order)
                        .normalize(&self.vars)
                })
                .collect();
            let source = ParamIdeal {
                generators: self.source.generators.iter().map(|g| g.evaluate(point)).collect(),
                order: self.order,
            };
            return GroebnerBasis {
                vars: self.vars.clone(),
                order: self.order,
                elements,
                source,
            };
        }
        let gens: Vec<Polynomial> = self
            .source
            .generators
            .iter()
            .map(|g| g.evaluate(point))
            .filter(|g| !g.is_zero())
            .collect();
        match ParamIdeal::new(gens, self.order) {
            Ok(ideal) => GroebnerBasis::compute(&ideal),
            Err(_) => GroebnerBasis {
                vars: self.vars.clone(),
                order: self.order,
                elements: Vec::new(),
                source: self.source.clone(),
            },
        }
    }

    /// Standard monomials of the quotient, optionally in a pinned order.
    pub fn standard_basis(&self, hint: Option<&[Monomial]>) -> Result<QuotientBasis> {
        let nx = self.vars.n_x();
        let leads: Vec<&XMono> = self.elements.iter().map(|g| &g.lead().0).collect();
        let mut bounds = vec![0u32; nx];
        for (p, bound) in bounds.iter_mut().enumerate() {
            let pure = leads
                .iter()
                .filter(|m| m.iter().enumerate().all(|(q, &e)| q == p || e == 0) && m[p] > 0)
                .map(|m| m[p])
                .min();
            match pure {
                Some(d) => *bound = d,
                None => return Err(Error::InfiniteQuotient(self.vars.x_vars()[p].clone())),
            }
        }
        let mut found: Vec<XMono> = Vec::new();
        let mut current = vec![0u32; nx];
        'outer: loop {
            if !leads.iter().any(|l| x_divides(l, &current)) {
                found.push(current.clone());
            }
            for p in 0..nx {
                current[p] += 1;
                if current[p] < bounds[p] {
                    continue 'outer;
                }
                current[p] = 0;
            }
            break;
        }
        found.sort_by(|a, b| self.order.cmp(a, b));
        let computed: Vec<Monomial> = found.iter().map(|m| self.full_monomial(m)).collect();
        let monomials = match hint {
            None => computed,
            Some(h) => {
                let mut sorted_hint: Vec<Monomial> = h.to_vec();
                sorted_hint.sort();
                let mut sorted_computed = computed.clone();
                sorted_computed.sort();
                if sorted_hint != sorted_computed {
                    let show = |ms: &[Monomial]| {
                        ms.iter()
                            .map(|m| Polynomial::term(&self.vars, m.clone(), Rational::one()).to_string())
                            .collect::<Vec<_>>()
                            .join(", ")
                    };
                    return Err(Error::BasisMismatch(format!(
                        "hint [{}] is not a permutation of the standard monomials [{}]",
                        show(h),
                        show(&computed)
                    )));
                }
                h.to_vec()
            }
        };
        Ok(QuotientBasis { monomials })
    }
}

/// Ordered standard monomials `e_0, ..., e_{mu-1}` of a finite quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBasis {
    monomials: Vec<Monomial>,
}

impl QuotientBasis {
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn mu(&self) -> usize {
        self.monomials.len()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.monomials.iter().position(|b| b == m)
    }

    pub fn as_polynomials(&self, vars: &Arc<VarTable>) -> Vec<Polynomial> {
        self.monomials
            .iter()
            .map(|m| Polynomial::term(vars, m.clone(), Rational::one()))
            .collect()
    }
}

/// A Gröbner basis together with an ordered monomial basis of its
/// quotient: the carrier of every coordinate computation.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    gb: GroebnerBasis,
    basis: QuotientBasis,
}

impl QuotientAlgebra {
    pub fn new(ideal: &ParamIdeal, hint: Option<&[Monomial]>) -> Result<Self> {
        let gb = GroebnerBasis::compute(ideal);
        if gb.is_unit_ideal() {
            return Err(Error::Input("the ideal is the whole ring (empty quotient)".into()));
        }
        let basis = gb.standard_basis(hint)?;
        Ok(QuotientAlgebra { gb, basis })
    }

    pub fn from_parts(gb: GroebnerBasis, basis: QuotientBasis) -> Self {
        QuotientAlgebra { gb, basis }
    }

    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn basis(&self) -> &QuotientBasis {
        &self.basis
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        self.gb.vars()
    }

    pub fn mu(&self) -> usize {
        self.basis.mu()
    }

    pub fn basis_polys(&self) -> Vec<Polynomial> {
        self.basis.as_polynomials(self.vars())
    }

    /// Coordinates of the normal form of `p` in the ordered basis.
    pub fn coords(&self, p: &Polynomial) -> Result<Vec<Polynomial>> {
        let r = self.gb.reduce(p)?;
        let vars = self.vars();
        let nx = vars.n_x();
        let mut out = vec![Polynomial::zero(vars); self.mu()];
        for (m, c) in r.terms() {
            let mut xm = vec![0u32; vars.len()];
            xm[..nx].copy_from_slice(&m.exponents()[..nx]);
            let xm = Monomial::from_exponents(&xm);
            let idx = self
                .basis
                .index_of(&xm)
                .expect("remainder is supported on standard monomials");
            let mut sm = m.clone();
            for i in 0..nx {
                sm.set_exp(i, 0);
            }
            out[idx].add_term(sm, c.clone());
        }
        Ok(out)
    }

    /// Matrix of multiplication by `p`: row `i` holds the coordinates of
    /// `p * e_i`.
    pub fn mul_matrix(&self, p: &Polynomial) -> Result<PolyMatrix> {
        let basis = self.basis_polys();
        let rows: Vec<Vec<Polynomial>> = basis
            .par_iter()
            .map(|e| self.coords(&(p * e)))
            .collect::<Result<_>>()?;
        PolyMatrix::from_rows(self.vars(), rows)
    }

    /// Trace of multiplication by `p` on the quotient.
    pub fn trace(&self, p: &Polynomial) -> Result<Polynomial> {
        let basis = self.basis_polys();
        let diag: Vec<Polynomial> = basis
            .par_iter()
            .enumerate()
            .map(|(i, e)| self.coords(&(p * e)).map(|c| c[i].clone()))
            .collect::<Result<_>>()?;
        Ok(diag.iter().fold(Polynomial::zero(self.vars()), |a, b| &a + b))
    }

    pub fn specialize(&self, point: &[(usize, Rational)]) -> Result<QuotientAlgebra> {
        let gb = self.gb.specialize(point);
        if gb.is_empty() || gb.is_unit_ideal() {
            return Err(Error::Degenerate("specialized ideal has an empty quotient".into()));
        }
        let basis = gb.standard_basis(None)?;
        if basis.mu() != self.mu() {
            return Err(Error::Degenerate(format!(
                "quotient dimension drops from {} to {} at this point",
                self.mu(),
                basis.mu()
            )));
        }
        let basis = gb.standard_basis(Some(self.basis.monomials()))?;
        Ok(QuotientAlgebra { gb, basis })
    }
}

impl ReductionCertificate {
    /// Checks `scale * p = sum cofactor * g + remainder` exactly.
    pub fn verify(&self, p: &Polynomial, gb: &GroebnerBasis) -> bool {
        let mut rhs = self.remainder.clone();
        for (c, g) in self.cofactors.iter().zip(gb.elements()) {
            rhs = &rhs + &(c * &g);
        }
        &self.scale * p == rhs
    }

    pub fn scale_is_constant(&self) -> bool {
        self.scale.is_constant() && !self.scale.is_zero()
    }
}
