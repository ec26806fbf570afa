use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::rational::{format_rational, Rational};
use super::vars::VarTable;
use crate::error::{Error, Result};

/// Sparse polynomial with exact rational coefficients.
///
/// Invariant: no stored coefficient is zero.
#[derive(Clone)]
pub struct Polynomial {
    vars: Arc<VarTable>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(vars: &Arc<VarTable>) -> Self {
        Polynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Arc<VarTable>) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: &Arc<VarTable>, c: Rational) -> Self {
        Self::term(vars, Monomial::one(vars.len()), c)
    }

    pub fn from_int(vars: &Arc<VarTable>, c: i64) -> Self {
        Self::constant(vars, Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(vars: &Arc<VarTable>, idx: usize) -> Self {
        Self::term(vars, Monomial::var(vars.len(), idx, 1), Rational::one())
    }

    pub fn term(vars: &Arc<VarTable>, m: Monomial, c: Rational) -> Self {
        debug_assert_eq!(m.len(), vars.len());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn from_terms(vars: &Arc<VarTable>, it: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn same_table(&self, other: &Polynomial) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || *self.vars == *other.vars
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.same_table(other) {
            Ok(())
        } else {
            Err(Error::VarTableMismatch)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    /// The value when the polynomial is constant (zero included).
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::one(self.vars.len()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn degree_in(&self, idx: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(idx)).max().unwrap_or(0)
    }

    pub fn involves(&self, idx: usize) -> bool {
        self.terms.keys().any(|m| m.exp(idx) > 0)
    }

    /// Whether any space variable occurs.
    pub fn involves_x(&self) -> bool {
        (0..self.vars.n_x()).any(|i| self.involves(i))
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self -= c * m * other`, in place.
    pub(crate) fn sub_scaled_shifted(&mut self, c: &Rational, m: &Monomial, other: &Polynomial) {
        for (om, oc) in &other.terms {
            self.add_term(m.mul(om), -(c * oc));
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.vars));
        }
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(big.terms.len() * 2);
        for (m1, c1) in &small.terms {
            for (m2, c2) in &big.terms {
                let c = c1 * c2;
                acc.entry(m1.mul(m2))
                    .and_modify(|v| *v += &c)
                    .or_insert(c);
            }
        }
        Ok(Polynomial {
            vars: self.vars.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn derivative(&self, idx: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.exp(idx);
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.set_exp(idx, e - 1);
            out.add_term(dm, c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Substitutes rational values for the listed variables; the rest stay
    /// symbolic. The variable table is unchanged.
    pub fn evaluate(&self, assignment: &[(usize, Rational)]) -> Polynomial {
        if assignment.is_empty() {
            return self.clone();
        }
        let mut cache: HashMap<(usize, u32), Rational> = HashMap::new();
        let mut out = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut mono = m.clone();
            for (idx, val) in assignment {
                let e = m.exp(*idx);
                if e == 0 {
                    continue;
                }
                let p = cache
                    .entry((*idx, e))
                    .or_insert_with(|| num_traits::pow(val.clone(), e as usize));
                coeff *= &*p;
                mono.set_exp(*idx, 0);
            }
            out.add_term(mono, coeff);
        }
        out
    }

    /// Replaces variable `idx` by the polynomial `value`.
    pub fn substitute(&self, idx: usize, value: &Polynomial) -> Polynomial {
        let coeffs = self.coeffs_in(idx);
        let mut acc = Polynomial::zero(&self.vars);
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// Coefficients with respect to variable `idx`: entry `k` multiplies `v^k`.
    pub fn coeffs_in(&self, idx: usize) -> Vec<Polynomial> {
        let deg = self.degree_in(idx) as usize;
        let mut out = vec![Polynomial::zero(&self.vars); if self.is_zero() { 0 } else { deg + 1 }];
        for (m, c) in &self.terms {
            let e = m.exp(idx) as usize;
            let mut mm = m.clone();
            mm.set_exp(idx, 0);
            out[e].terms.insert(mm, c.clone());
        }
        out
    }

    pub fn from_coeffs_in(vars: &Arc<VarTable>, idx: usize, coeffs: &[Polynomial]) -> Polynomial {
        let mut out = Polynomial::zero(vars);
        for (k, c) in coeffs.iter().enumerate() {
            let shift = Monomial::var(vars.len(), idx, k as u32);
            for (m, v) in &c.terms {
                out.add_term(m.mul(&shift), v.clone());
            }
        }
        out
    }

    /// Weighted degree shared by every term, if the polynomial is weighted
    /// homogeneous. `None` for the zero polynomial or mixed degrees.
    pub fn weighted_degree(&self, weights: &[i64]) -> Option<i64> {
        let mut it = self.terms.keys().map(|m| m.weighted_degree(weights));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        self.check(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (lm, lc) = divisor.leading_term().unwrap();
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quo = Polynomial::zero(&self.vars);
        while let Some((m, c)) = rem.leading_term() {
            let Some(qm) = lm.quotient_of(m) else {
                return Ok(None);
            };
            let qc = c / &lc;
            rem.sub_scaled_shifted(&qc, &qm, divisor);
            quo.add_term(qm, qc);
        }
        Ok(Some(quo))
    }

    /// Exact quotient, failing with [`Error::NotDivisible`] on a remainder.
    pub fn exact_divide(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.div_exact(divisor)?
            .ok_or_else(|| Error::NotDivisible(format!("({}) / ({})", self, divisor)))
    }

    /// Splits off the rational unit: returns `(c, p)` with `self = c * p`,
    /// `p` having coprime integer coefficients and a positive leading
    /// coefficient.
    pub fn unit_normal(&self) -> (Rational, Polynomial) {
        if self.is_zero() {
            return (Rational::one(), self.clone());
        }
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
            num = num.gcd(c.numer());
        }
        let mut unit = Rational::new(num, den);
        if self.leading_coefficient().is_negative() {
            unit = -unit;
        }
        let inv = unit.recip();
        (unit, self.scale(&inv))
    }

    pub fn normalized(&self) -> Polynomial {
        self.unit_normal().1
    }

    /// Monic scaling: leading coefficient 1.
    pub fn monic(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_coefficient().recip())
    }

    /// Sign-insensitive equality up to a nonzero rational factor; returns
    /// the factor `c` with `self = c * other`.
    pub fn ratio_to(&self, other: &Polynomial) -> Option<Rational> {
        if self.is_zero() || other.is_zero() || self.terms.len() != other.terms.len() {
            return None;
        }
        let c = self.leading_coefficient() / other.leading_coefficient();
        (*self == other.scale(&c)).then_some(c)
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.same_table(other) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let mut factors = Vec::new();
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars.name(i).to_string()),
                    _ => factors.push(format!("{}^{}", self.vars.name(i), e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{}", format_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(&a), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics when the operands use different variable tables; use the
            /// `checked_*` form to get an error instead.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial variable tables differ")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse_poly;
    use super::*;

    fn vt() -> Arc<VarTable> {
        VarTable::new(&["x", "y"], &["u", "b", "c"]).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        parse_poly(s, &vt()).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p("x+y") * &p("x-y"), p("x^2 - y^2"));
    }

    #[test]
    fn evaluate_partial() {
        let v = vt();
        let q = p("b^2*c").evaluate(&[
            (v.index_of("b").unwrap(), Rational::new((-2).into(), 5.into())),
            (v.index_of("c").unwrap(), Rational::new(1.into(), 10.into())),
        ]);
        assert_eq!(q.constant_value().unwrap(), Rational::new(2.into(), 125.into()));
        let partial = p("x*b + c").evaluate(&[(v.index_of("b").unwrap(), Rational::from_integer(2.into()))]);
        assert_eq!(partial, p("2*x + c"));
    }

    #[test]
    fn exact_division() {
        assert_eq!(p("x^2 - 1").exact_divide(&p("x + 1")).unwrap(), p("x - 1"));
        assert!(p("x^2 + 1").div_exact(&p("x + 1")).unwrap().is_none());
        assert_eq!(p("x").div_exact(&p("0")), Err(Error::DivisionByZero));
    }

    #[test]
    fn coefficient_views_roundtrip() {
        let q = p("u^2*b + 3*u - c + x*u");
        let u = vt().index_of("u").unwrap();
        let cs = q.coeffs_in(u);
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[1], p("3 + x"));
        assert_eq!(Polynomial::from_coeffs_in(&vt(), u, &cs), q);
        assert_eq!(q.substitute(u, &p("-u")), p("u^2*b - 3*u - c - x*u"));
    }

    #[test]
    fn unit_normal_form() {
        let (c, n) = p("-2/3*x + 4/9").unit_normal();
        assert_eq!(n, p("3*x - 2"));
        assert_eq!(n.scale(&c), p("-2/3*x + 4/9"));
    }

    #[test]
    fn mismatched_tables_error() {
        let other = VarTable::new(&["x"], &[]).unwrap();
        let a = p("x");
        let b = parse_poly("x", &other).unwrap();
        assert_eq!(a.checked_add(&b), Err(Error::VarTableMismatch));
    }
}
