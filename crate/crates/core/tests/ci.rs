//! Complete intersections: the k = 1 case against the hypersurface
//! pipeline, and a genuine k = 2 curve.

mod common;

use std::sync::Arc;

use logdisc_core::ci::{CISpec, CompleteIntersection};
use logdisc_core::hyper::{DeformationSpec, Hypersurface};
use logdisc_core::polyring::{int, parse_poly, squarefree_core, PolyMatrix, Polynomial, Rational, VarTable};

fn p(vt: &Arc<VarTable>, s: &str) -> Polynomial {
    parse_poly(s, vt).unwrap()
}

fn example_one_vt() -> Arc<VarTable> {
    VarTable::new(&["x1", "x2"], &["u", "d", "c", "b"]).unwrap()
}

/// `F_1 - u = -(x1^3 + x2^3 + b x1 x2 + c x1 + d x2 + u)`: the hypersurface
/// family up to sign.
fn example_one_ci() -> CompleteIntersection {
    let vt = example_one_vt();
    let spec = CISpec::new(vec![p(&vt, "-(x1^3 + x2^3 + b*x1*x2 + c*x1 + d*x2)")]).unwrap();
    let hint: Vec<_> = ["1", "x2", "x1", "x1*x2"]
        .iter()
        .map(|s| p(&vt, s).leading_term().unwrap().0.clone())
        .collect();
    CompleteIntersection::new(spec, Some(&hint)).unwrap()
}

fn example_one_hyper() -> Hypersurface {
    let vt = example_one_vt();
    let basis = ["1", "x2", "x1", "x1*x2"].iter().map(|s| p(&vt, s)).collect();
    Hypersurface::new(DeformationSpec::new(p(&vt, "x1^3 + x2^3"), basis).unwrap(), None).unwrap()
}

/// The curve `x1 = x2^3 + t x2` projected to `x1`.
fn cusp_curve() -> CompleteIntersection {
    let vt = VarTable::new(&["x1", "x2"], &["u", "t"]).unwrap();
    let spec = CISpec::new(vec![p(&vt, "x1"), p(&vt, "x1 - x2^3 - t*x2")]).unwrap();
    CompleteIntersection::new(spec, None).unwrap()
}

/// `a | c * b^k` for some constant `c` and `k <= 8`.
fn divides_power(a: &Polynomial, b: &Polynomial) -> bool {
    let mut acc = b.clone();
    for _ in 0..8 {
        if acc.div_exact(a).unwrap().is_some() {
            return true;
        }
        acc = &acc * b;
    }
    false
}

fn is_symmetric(m: &PolyMatrix) -> bool {
    m.is_symmetric()
}

#[test]
fn example_one_determinants_agree() {
    let ci = example_one_ci();
    let tables = ci.tables().unwrap();
    let (det_p, _) = ci.discriminant_and_bifurcation(&tables).unwrap();
    let hs = example_one_hyper();
    let tabs = hs.mul_tables().unwrap();
    let log = hs.log_matrix(&tabs).unwrap();
    // Same vanishing locus, and in fact proportional.
    assert!(divides_power(&det_p, &log.discriminant));
    assert!(divides_power(&log.discriminant, &det_p));
    assert_eq!(det_p.ratio_to(&log.discriminant), Some(Rational::new(1.into(), 81.into())));
}

#[test]
fn weierstrass_form() {
    for ci in [example_one_ci(), cusp_curve()] {
        let tables = ci.tables().unwrap();
        let (det_p, _) = ci.discriminant_and_bifurcation(&tables).unwrap();
        let vars = ci.spec().vars().clone();
        let u = ci.spec().u_index();
        let mu = ci.mu();
        let coeffs = det_p.coeffs_in(u);
        assert_eq!(coeffs.len(), mu + 1);
        let lead = coeffs[mu].constant_value().expect("constant leading coefficient");
        assert!(lead == int(1) || lead == int(-1));
        let origin: Vec<(usize, Rational)> = (1..vars.n_s()).map(|j| (vars.s_index(j), int(0))).collect();
        for c in &coeffs[..mu] {
            assert!(c.evaluate(&origin).is_zero(), "{c} does not vanish at t = 0");
        }
        // P + u Id does not involve u.
        let shifted = tables.p.add(&PolyMatrix::identity(&vars, mu).scale(&Polynomial::var(&vars, u))).unwrap();
        assert!(shifted.entries().all(|e| !e.involves(u)));
        assert!(is_symmetric(&tables.p.mul(&tables.t).unwrap()));
        assert!(is_symmetric(&tables.t));
        for w in &tables.w.tau {
            assert!(is_symmetric(w));
        }
    }
}

#[test]
fn quasihomogeneous_discriminant() {
    for ci in [example_one_ci(), cusp_curve()] {
        let ws = ci.spec().derive_weights().unwrap();
        let tables = ci.tables().unwrap();
        let (det_p, _) = ci.discriminant_and_bifurcation(&tables).unwrap();
        let wu = ws.s_weights[0];
        assert_eq!(det_p.weighted_degree(&ws.full()), Some(ci.mu() as i64 * wu));
    }
}

#[test]
fn a2_discriminant() {
    let vt = VarTable::new(&["x"], &["u", "b"]).unwrap();
    let ci = CompleteIntersection::new(CISpec::new(vec![p(&vt, "-(x^3 + b*x)")]).unwrap(), None).unwrap();
    let tables = ci.tables().unwrap();
    let (det_p, _) = ci.discriminant_and_bifurcation(&tables).unwrap();
    let ratio = det_p.ratio_to(&p(&vt, "4*b^3 + 27*u^2")).unwrap();
    assert!(ratio > int(0));
}

#[test]
fn cusp_curve_tables() {
    let ci = cusp_curve();
    let vt = ci.spec().vars().clone();
    let names: Vec<String> = ci.algebra().basis_polys().iter().map(|b| b.to_string()).collect();
    assert_eq!(names, ["1", "x2"]);
    let tables = ci.tables().unwrap();
    let want_p = PolyMatrix::from_rows(
        &vt,
        vec![vec![p(&vt, "-u"), p(&vt, "2/3*t")], vec![p(&vt, "-2/9*t^2"), p(&vt, "-u")]],
    )
    .unwrap();
    assert_eq!(tables.p, want_p);
    let (det_p, det_t) = ci.discriminant_and_bifurcation(&tables).unwrap();
    // Critical values of x1 on the curve are +-(2/3) t sqrt(-t/3).
    assert_eq!(det_p, p(&vt, "u^2 + 4/27*t^3"));
    assert_eq!(det_t, p(&vt, "-4/3*t"));
    let ws = ci.spec().derive_weights().unwrap();
    assert_eq!(ws.x_weights, [3, 1]);
    assert_eq!(ws.s_weights, [3, 2]);
    assert_eq!(ws.map_weights, [3, 3]);
}

#[test]
fn gauss_manin_example_one() {
    assert_eq!(common::gm_mismatches(&example_one_ci()), Vec::<String>::new());
}

#[test]
fn gauss_manin_cusp_curve() {
    assert_eq!(common::gm_mismatches(&cusp_curve()), Vec::<String>::new());
}

#[test]
fn gauss_manin_scales_with_weights() {
    let ci = example_one_ci();
    let ws = ci.spec().derive_weights().unwrap();
    let tables = ci.tables().unwrap();
    let once = ci.gm_coefficients(&tables, &ws).unwrap();
    let twice = ci.gm_coefficients(&tables, &ws.scaled(2)).unwrap();
    assert_eq!(twice.trm0, 2 * once.trm0);
    for (a, b) in once.b.iter().zip(&twice.b) {
        assert_eq!(&a.scale_rational(&int(2)), b);
    }
}

#[test]
fn specialization_commutes() {
    let ci = cusp_curve();
    let vt = ci.spec().vars().clone();
    let t = vt.index_of("t").unwrap();
    let point = [(t, Rational::new((-3).into(), 1.into()))];
    let tables = ci.tables().unwrap();
    let at = ci.specialize(&point).unwrap();
    let direct = at.tables().unwrap();
    assert_eq!(tables.p.evaluate(&point), direct.p);
    assert_eq!(tables.t.evaluate(&point), direct.t);
    let (det_p, det_t) = ci.discriminant_and_bifurcation(&tables).unwrap();
    assert_eq!(squarefree_core(&det_t), p(&vt, "t"));
    assert_eq!(det_p.evaluate(&point), p(&vt, "u^2 - 4"));
}
