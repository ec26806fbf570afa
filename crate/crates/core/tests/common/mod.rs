//! Expected values shared by the regression tests and the acceptance run.
#![allow(dead_code)]

pub mod e6;
pub mod example_one;

use std::sync::Arc;

use logdisc_core::ci::CompleteIntersection;
use logdisc_core::polyring::{int, parse_poly, Monomial, PolyMatrix, Polynomial, VarTable};

pub fn p(vt: &Arc<VarTable>, s: &str) -> Polynomial {
    parse_poly(s, vt).unwrap()
}

/// Every entry where `got` differs from `want`.
pub fn mismatches<const N: usize, S: AsRef<str>>(label: &str, got: &PolyMatrix, want: &[[S; N]; N]) -> Vec<String> {
    let vt = got.vars().clone();
    let mut bad = Vec::new();
    for (i, row) in want.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            if got.get(i, j) != &p(&vt, s.as_ref()) {
                bad.push(format!("{label}({},{}): got {} want {}", i + 1, j + 1, got.get(i, j), s.as_ref()));
            }
        }
    }
    bad
}

/// Parameter polynomial multiplying the space monomial `m` in `p`.
pub fn coefficient_of_x(p: &Polynomial, m: &Monomial) -> Polynomial {
    let nx = p.vars().n_x();
    Polynomial::from_terms(
        p.vars(),
        p.terms()
            .filter(|(t, _)| t.exponents()[..nx] == m.exponents()[..nx])
            .map(|(t, c)| {
                let mut s = t.clone();
                for q in 0..nx {
                    s.set_exp(q, 0);
                }
                (s, c.clone())
            }),
    )
}

/// Checks the Gauss–Manin coefficients two independent ways: reducing
/// `sum_p d(phi_i phi_j w_p x_p)/dx_p` with a verified division
/// certificate, and Euler's identity
/// `R^l_{ij} = (wdeg phi_i + wdeg phi_j + sum_p w_p) w^l_{ij}`, valid since
/// products of basis monomials are monomials. Returns every mismatch.
pub fn gm_mismatches(ci: &CompleteIntersection) -> Vec<String> {
    let ws = ci.spec().derive_weights().unwrap();
    let tables = ci.tables().unwrap();
    let gm = ci.gm_coefficients(&tables, &ws).unwrap();
    let full = ws.full();
    let basis = ci.algebra().basis().monomials().to_vec();
    let polys = ci.algebra().basis_polys();
    let sum_w: i64 = ws.x_weights.iter().sum();
    let mu = ci.mu();
    let vars = ci.spec().vars().clone();
    let gb = ci.algebra().gb();
    let mut bad = Vec::new();
    for j in 0..mu {
        for i in 0..mu {
            let f = int(basis[i].weighted_degree(&full) + basis[j].weighted_degree(&full) + sum_w);
            let prod = &polys[i] * &polys[j];
            let div = (0..vars.n_x()).fold(Polynomial::zero(&vars), |acc, q| {
                &acc + &(&prod * &Polynomial::var(&vars, q).scale(&int(ws.x_weights[q]))).derivative(q)
            });
            let cert = gb.normal_form(&div).unwrap();
            if !cert.verify(&div, gb) || !cert.scale_is_constant() {
                bad.push(format!("certificate for ({i},{j}) fails"));
                continue;
            }
            let rem = cert.remainder.scale(&(int(1) / cert.scale.constant_value().unwrap()));
            for l in 0..mu {
                let euler = tables.w.tau[l].get(i, j).scale(&f);
                let reduced = coefficient_of_x(&rem, &basis[l]);
                let b = &tables.w.tau[l].get(i, j).scale(&int(gm.trm0)) + &reduced;
                if gm.r[j].get(i, l) != &reduced || reduced != euler || gm.b[j].get(i, l) != &b {
                    bad.push(format!("R/B entry (j={j}, i={i}, l={l})"));
                }
            }
        }
    }
    bad
}
