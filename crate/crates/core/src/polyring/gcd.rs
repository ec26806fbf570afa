use super::poly::Polynomial;

pub(crate) fn trim(v: &mut Vec<Polynomial>) {
    while v.last().is_some_and(|p| p.is_zero()) {
        v.pop();
    }
}

pub(crate) fn degree(v: &[Polynomial]) -> Option<usize> {
    v.iter().rposition(|p| !p.is_zero())
}

/// Pseudo-remainder of coefficient vectors in one variable:
/// `lc(b)^(deg a - deg b + 1) * a mod b`.
pub(crate) fn prem(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    let mut r: Vec<Polynomial> = a.to_vec();
    trim(&mut r);
    let db = degree(b).expect("pseudo-division by zero");
    let lb = &b[db];
    let Some(da) = degree(&r) else {
        return r;
    };
    if da < db {
        return r;
    }
    let mut steps = 0;
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (k, bk) in b.iter().enumerate().take(db + 1) {
            r[k + shift] = &r[k + shift] - &(&lr * bk);
        }
        trim(&mut r);
        steps += 1;
    }
    let missing = (da - db + 1) - steps;
    if missing > 0 {
        let f = lb.pow(missing as u32);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    trim(&mut r);
    r
}

/// Gcd of the coefficients of `p` viewed as a polynomial in variable `v`.
pub(crate) fn content_in(p: &Polynomial, v: usize) -> Polynomial {
    let mut g = Polynomial::zero(p.vars());
    for c in p.coeffs_in(v) {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, &c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn content_of(coeffs: &[Polynomial], zero: &Polynomial) -> Polynomial {
    let mut g = zero.clone();
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn primitive(coeffs: &[Polynomial], zero: &Polynomial) -> Vec<Polynomial> {
    let c = content_of(coeffs, zero);
    if c.is_one() {
        return coeffs.to_vec();
    }
    coeffs
        .iter()
        .map(|x| x.exact_divide(&c).expect("content divides every coefficient"))
        .collect()
}

/// Greatest common divisor, normalized to coprime integer coefficients
/// with a positive leading coefficient. `gcd(0, 0) = 0`.
///
/// Recursive over the variables, with a primitive pseudo-remainder
/// sequence in the main variable.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    assert!(a.same_table(b), "polynomial variable tables differ");
    if a.is_zero() {
        return b.normalized();
    }
    if b.is_zero() {
        return a.normalized();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one(a.vars());
    }
    if let Ok(Some(_)) = a.div_exact(b) {
        return b.normalized();
    }
    if let Ok(Some(_)) = b.div_exact(a) {
        return a.normalized();
    }
    let n = a.vars().len();
    let v = (0..n)
        .find(|&i| a.involves(i) || b.involves(i))
        .expect("nonconstant polynomial involves a variable");
    match (a.involves(v), b.involves(v)) {
        (true, false) => gcd(&content_in(a, v), b),
        (false, true) => gcd(a, &content_in(b, v)),
        _ => {
            let ca = content_in(a, v);
            let cb = content_in(b, v);
            let c = gcd(&ca, &cb);
            let zero = Polynomial::zero(a.vars());
            let mut pa = primitive(&a.coeffs_in(v), &zero);
            let mut pb = primitive(&b.coeffs_in(v), &zero);
            if degree(&pa) < degree(&pb) {
                std::mem::swap(&mut pa, &mut pb);
            }
            let g = loop {
                let r = prem(&pa, &pb);
                match degree(&r) {
                    None => break pb,
                    Some(0) => break vec![Polynomial::one(a.vars())],
                    Some(_) => {
                        pa = pb;
                        pb = primitive(&r, &zero);
                    }
                }
            };
            let g = Polynomial::from_coeffs_in(a.vars(), v, &primitive(&g, &zero));
            (&c * &g).normalized()
        }
    }
}

/// Product of the distinct irreducible factors of `p` (normalized);
/// `1` for constants.
pub fn squarefree_core(p: &Polynomial) -> Polynomial {
    if p.is_constant() {
        return Polynomial::one(p.vars());
    }
    let mut g = p.clone();
    for v in 0..p.vars().len() {
        if p.involves(v) {
            g = gcd(&g, &p.derivative(v));
            if g.is_one() {
                break;
            }
        }
    }
    p.exact_divide(&g)
        .expect("gcd with derivatives divides p")
        .normalized()
}
