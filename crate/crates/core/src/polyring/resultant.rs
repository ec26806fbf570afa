use super::gcd::{degree, prem, trim};
use super::matrix::PolyMatrix;
use super::poly::Polynomial;
use crate::error::{Error, Result};

fn coeffs(p: &Polynomial, v: usize) -> Vec<Polynomial> {
    let mut c = p.coeffs_in(v);
    trim(&mut c);
    c
}

/// Resultant of `p` and `q` with respect to variable `v`, by the
/// subresultant pseudo-remainder sequence. Equals the determinant of the
/// Sylvester matrix.
pub fn resultant(p: &Polynomial, q: &Polynomial, v: usize) -> Result<Polynomial> {
    if !p.same_table(q) {
        return Err(Error::VarTableMismatch);
    }
    if !p.involves(v) {
        return Err(Error::ConstantIn(p.vars().name(v).to_string()));
    }
    let one = Polynomial::one(p.vars());
    let mut a = coeffs(p, v);
    let mut b = coeffs(q, v);
    if b.is_empty() {
        return Ok(Polynomial::zero(p.vars()));
    }
    let (da, db) = (degree(&a).unwrap(), degree(&b).unwrap());
    if db == 0 {
        return Ok(b[0].pow(da as u32));
    }
    let mut sign = 1i32;
    if da < db {
        std::mem::swap(&mut a, &mut b);
        if da % 2 == 1 && db % 2 == 1 {
            sign = -1;
        }
    }
    let mut g = one.clone();
    let mut h = one.clone();
    loop {
        let (da, db) = (degree(&a).unwrap(), degree(&b).unwrap());
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let r = prem(&a, &b);
        a = b;
        if r.is_empty() {
            return Ok(Polynomial::zero(p.vars()));
        }
        let div = &g * &h.pow(delta);
        b = r
            .iter()
            .map(|c| c.exact_divide(&div))
            .collect::<Result<Vec<_>>>()?;
        g = a[degree(&a).unwrap()].clone();
        if delta > 0 {
            h = g.pow(delta).exact_divide(&h.pow(delta - 1))?;
        }
        if degree(&b).unwrap() == 0 {
            break;
        }
    }
    let da = degree(&a).unwrap() as u32;
    let res = b[0].pow(da).exact_divide(&h.pow(da - 1))?;
    Ok(if sign < 0 { -res } else { res })
}

/// Discriminant in `v`: `(-1)^(n(n-1)/2) * Res(p, dp/dv) / lc(p)`.
/// Degree-one polynomials have discriminant `1`.
pub fn discriminant(p: &Polynomial, v: usize) -> Result<Polynomial> {
    if !p.involves(v) {
        return Err(Error::ConstantIn(p.vars().name(v).to_string()));
    }
    let c = coeffs(p, v);
    let n = c.len() - 1;
    if n == 1 {
        return Ok(Polynomial::one(p.vars()));
    }
    let res = resultant(p, &p.derivative(v), v)?;
    let d = res.exact_divide(&c[n])?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
}

/// Sylvester matrix of `p` and `q` in variable `v`; its determinant is the
/// resultant.
pub fn sylvester_matrix(p: &Polynomial, q: &Polynomial, v: usize) -> PolyMatrix {
    let a = coeffs(p, v);
    let b = coeffs(q, v);
    let m = a.len().saturating_sub(1);
    let n = b.len().saturating_sub(1);
    let size = m + n;
    let mut mat = PolyMatrix::zeros(p.vars(), size, size);
    for i in 0..n {
        for (k, c) in a.iter().rev().enumerate() {
            mat.set(i, i + k, c.clone());
        }
    }
    for i in 0..m {
        for (k, c) in b.iter().rev().enumerate() {
            mat.set(n + i, i + k, c.clone());
        }
    }
    mat
}

#[cfg(test)]
mod tests {
    use super::super::{parse_poly, VarTable};
    use super::*;

    #[test]
    fn linear_resultant_is_difference() {
        let vt = VarTable::new(&["x"], &["u", "a", "b"]).unwrap();
        let p = |s: &str| parse_poly(s, &vt).unwrap();
        let u = vt.index_of("u").unwrap();
        let r = resultant(&p("u - a"), &p("u - b"), u).unwrap();
        assert_eq!(r, p("a - b"));
    }

    #[test]
    fn quadratic_discriminant() {
        let vt = VarTable::new(&["x"], &["u", "b"]).unwrap();
        let p = |s: &str| parse_poly(s, &vt).unwrap();
        let u = vt.index_of("u").unwrap();
        assert_eq!(discriminant(&p("u^2 + b"), u).unwrap(), p("-4*b"));
        assert_eq!(discriminant(&p("2*u + b"), u).unwrap(), p("1"));
        assert_eq!(discriminant(&p("b"), u), Err(Error::ConstantIn("u".into())));
    }

    #[test]
    fn cubic_resultant_matches_sylvester() {
        let vt = VarTable::new(&["x"], &["u", "b"]).unwrap();
        let p = |s: &str| parse_poly(s, &vt).unwrap();
        let f = p("x^3 + b*x + u");
        let r = resultant(&f, &f.derivative(0), 0).unwrap();
        assert_eq!(r, p("4*b^3 + 27*u^2"));
        let s = sylvester_matrix(&f, &f.derivative(0), 0).det_bareiss().unwrap();
        assert_eq!(s, r);
    }

    #[test]
    fn constant_second_argument() {
        let vt = VarTable::new(&["x"], &["b"]).unwrap();
        let p = |s: &str| parse_poly(s, &vt).unwrap();
        assert_eq!(resultant(&p("x^2 + 1"), &p("b"), 0).unwrap(), p("b^2"));
    }
}
