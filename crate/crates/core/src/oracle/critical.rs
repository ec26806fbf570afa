use nalgebra::{DMatrix, DVector, SymmetricEigen};
use rayon::prelude::*;

use super::numpoly::NumFunction;
use crate::error::Result;
use crate::polyring::Polynomial;

#[derive(Clone, Debug)]
pub struct OracleOptions {
    /// Number of quasi-random Newton starts.
    pub starts: usize,
    /// Points closer than this are merged (absolute, in x).
    pub dedup_radius: f64,
    /// Bound on the gradient residual, relative to the size of its terms.
    pub residual_tol: f64,
    pub max_iter: usize,
}

impl OracleOptions {
    pub fn defaults(mu: usize, ball_radius: f64) -> Self {
        OracleOptions {
            starts: 200 * mu.max(1),
            dedup_radius: 1e-6 * ball_radius,
            residual_tol: 1e-10,
            max_iter: 100,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CriticalPoint {
    pub coords: Vec<f64>,
    pub value: f64,
    /// Negative directions of the (constrained) Hessian.
    pub morse_index: usize,
    pub hessian_sign: i32,
}

#[derive(Clone, Debug)]
pub struct CriticalPointReport {
    pub points: Vec<CriticalPoint>,
    pub residual_bound: f64,
    pub starts: usize,
    /// Distinct critical points found outside the ball (not in `points`).
    pub outside_ball: usize,
    pub warnings: Vec<String>,
}

impl CriticalPointReport {
    /// `#{value > 0} - #{value < 0}`.
    pub fn signed_count(&self) -> i64 {
        self.points.iter().map(|p| p.value.signum() as i64).sum()
    }
}

/// Radical inverse of `k` in `base`.
fn halton(mut k: usize, base: usize) -> f64 {
    let mut f = 1.0;
    let mut r = 0.0;
    while k > 0 {
        f /= base as f64;
        r += f * (k % base) as f64;
        k /= base;
    }
    r
}

const PRIMES: [usize; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Critical points of `f` inside the ball of radius `ball_radius`,
/// restricted to `constraints = 0` when given (Lagrange system). All
/// inputs must have their parameters fixed. `expected` is the number of
/// complex critical points (used for the warning only).
pub fn find_critical_points(
    f: &Polynomial,
    constraints: &[Polynomial],
    ball_radius: f64,
    expected: usize,
    opts: &OracleOptions,
) -> Result<CriticalPointReport> {
    let sys = System::new(f, constraints)?;
    let n = sys.n;
    let found: Vec<(Vec<f64>, f64)> = (1..=opts.starts)
        .into_par_iter()
        .filter_map(|k| {
            let x0: Vec<f64> = (0..n)
                .map(|d| (2.0 * halton(k, PRIMES[d % PRIMES.len()]) - 1.0) * ball_radius)
                .collect();
            sys.newton(x0, ball_radius, opts)
        })
        .collect();
    let mut distinct: Vec<(Vec<f64>, f64)> = Vec::new();
    for (z, res) in found {
        let dup = distinct
            .iter_mut()
            .find(|(w, _)| dist(&z[..n], &w[..n]) < opts.dedup_radius);
        match dup {
            Some(d) if res < d.1 => *d = (z, res),
            Some(_) => {}
            None => distinct.push((z, res)),
        }
    }
    distinct.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(std::cmp::Ordering::Equal));
    let mut warnings = Vec::new();
    let mut points = Vec::new();
    let mut outside = 0;
    let mut residual_bound: f64 = 0.0;
    for (z, res) in distinct {
        if dist(&z[..n], &vec![0.0; n]) > ball_radius {
            outside += 1;
            continue;
        }
        residual_bound = residual_bound.max(res);
        let (morse_index, degenerate) = sys.morse_index(&z);
        if degenerate {
            warnings.push(format!("degenerate critical point near {:?}", &z[..n]));
        }
        points.push(CriticalPoint {
            coords: z[..n].to_vec(),
            value: sys.f.f.eval(&z[..n]),
            morse_index,
            hessian_sign: if morse_index % 2 == 0 { 1 } else { -1 },
        });
    }
    if points.len() + outside < expected {
        warnings.push(format!(
            "found {} of at most {} critical points; the remainder are complex or the point is near the bifurcation set",
            points.len() + outside,
            expected
        ));
    }
    Ok(CriticalPointReport {
        points,
        residual_bound,
        starts: opts.starts,
        outside_ball: outside,
        warnings,
    })
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

/// `grad f - sum_q lambda_q grad g_q = 0`, `g_q = 0` in unknowns `(x, lambda)`.
struct System {
    n: usize,
    f: NumFunction,
    cons: Vec<NumFunction>,
}

impl System {
    fn new(f: &Polynomial, constraints: &[Polynomial]) -> Result<Self> {
        Ok(System {
            n: f.vars().n_x(),
            f: NumFunction::new(f)?,
            cons: constraints.iter().map(NumFunction::new).collect::<Result<_>>()?,
        })
    }

    fn residual(&self, z: &[f64]) -> (DVector<f64>, f64) {
        let (n, k) = (self.n, self.cons.len());
        let x = &z[..n];
        let pw = self.f.powers(x);
        let mut full = DVector::zeros(n + k);
        let mut scale: f64 = 1.0;
        for p in 0..n {
            let (v, m) = self.f.grad[p].eval_with(&pw);
            full[p] = v;
            scale = scale.max(m);
        }
        for (q, g) in self.cons.iter().enumerate() {
            let gp = g.powers(x);
            for p in 0..n {
                let (v, m) = g.grad[p].eval_with(&gp);
                full[p] -= z[n + q] * v;
                scale = scale.max((z[n + q] * m).abs());
            }
            let (v, m) = g.f.eval_with(&gp);
            full[n + q] = v;
            scale = scale.max(m);
        }
        let norm = full.norm();
        (full, norm / scale)
    }

    fn jacobian(&self, z: &[f64]) -> DMatrix<f64> {
        let (n, k) = (self.n, self.cons.len());
        let x = &z[..n];
        let mut j = DMatrix::zeros(n + k, n + k);
        let h = self.f.hessian(x);
        for a in 0..n {
            for b in 0..n {
                j[(a, b)] = h[a][b];
            }
        }
        for (q, g) in self.cons.iter().enumerate() {
            let hg = g.hessian(x);
            let gg = g.gradient(x);
            for a in 0..n {
                for b in 0..n {
                    j[(a, b)] -= z[n + q] * hg[a][b];
                }
                j[(a, n + q)] = -gg[a];
                j[(n + q, a)] = gg[a];
            }
        }
        j
    }

    /// Least-squares multipliers for a given `x`.
    fn multipliers(&self, x: &[f64]) -> Vec<f64> {
        let k = self.cons.len();
        if k == 0 {
            return Vec::new();
        }
        let n = self.n;
        let a = DMatrix::from_fn(n, k, |p, q| self.cons[q].grad[p].eval(x));
        let b = DVector::from_vec(self.f.gradient(x));
        match a.svd(true, true).solve(&b, 1e-12) {
            Ok(l) => l.iter().copied().collect(),
            Err(_) => vec![0.0; k],
        }
    }

    fn newton(&self, x0: Vec<f64>, radius: f64, opts: &OracleOptions) -> Option<(Vec<f64>, f64)> {
        let mut z = x0.clone();
        z.extend(self.multipliers(&x0));
        let (mut r, mut res) = self.residual(&z);
        for _ in 0..opts.max_iter {
            if res < opts.residual_tol {
                break;
            }
            let j = self.jacobian(&z);
            let step = match j.clone().lu().solve(&(-&r)) {
                Some(s) if s.iter().all(|v| v.is_finite()) => s,
                _ => j.svd(true, true).solve(&(-&r), 1e-14).ok()?,
            };
            // Backtrack; a start whose residual cannot decrease has stalled
            // at a non-root minimum of |G| and is abandoned.
            let mut alpha = 1.0;
            let mut accepted = false;
            while alpha > 1e-8 {
                let trial: Vec<f64> = z.iter().zip(step.iter()).map(|(a, s)| a + alpha * s).collect();
                let (tr, tres) = self.residual(&trial);
                if tr.norm() < r.norm() {
                    z = trial;
                    r = tr;
                    res = tres;
                    accepted = true;
                    break;
                }
                alpha /= 2.0;
            }
            if !accepted || dist(&z[..self.n], &vec![0.0; self.n]) > 10.0 * radius {
                return None;
            }
        }
        (res < opts.residual_tol).then_some((z, res))
    }

    /// Index of the Hessian of the Lagrangian on the tangent space of the
    /// constraints, and whether it is (numerically) degenerate.
    fn morse_index(&self, z: &[f64]) -> (usize, bool) {
        let n = self.n;
        let k = self.cons.len();
        let x = &z[..n];
        let mut h = DMatrix::from_fn(n, n, |a, b| self.f.hessian(x)[a][b]);
        for (q, g) in self.cons.iter().enumerate() {
            let hg = g.hessian(x);
            h -= DMatrix::from_fn(n, n, |a, b| z[n + q] * hg[a][b]);
        }
        let reduced = if k == 0 {
            h
        } else {
            // Orthonormal basis of the kernel of the constraint Jacobian.
            let a = DMatrix::from_fn(n, n, |p, c| if p < k { self.cons[p].grad[c].eval(x) } else { 0.0 });
            let svd = a.svd(false, true);
            let vt = svd.v_t.expect("v_t requested");
            let basis = DMatrix::from_fn(n, n - k, |i, j| vt[(k + j, i)]);
            basis.transpose() * h * basis
        };
        let scale = reduced.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        let eig = SymmetricEigen::new(reduced);
        let neg = eig.eigenvalues.iter().filter(|&&l| l < 0.0).count();
        let degenerate = eig.eigenvalues.iter().any(|l| l.abs() < 1e-9 * scale);
        (neg, degenerate)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_poly, VarTable};

    #[test]
    fn halton_points() {
        assert_eq!(halton(1, 2), 0.5);
        assert_eq!(halton(3, 2), 0.75);
        assert!((halton(1, 3) - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn no_real_points_for_a2() {
        let vt = VarTable::new(&["x"], &[]).unwrap();
        let f = parse_poly("x^3 + x", &vt).unwrap();
        let r = find_critical_points(&f, &[], 10.0, 2, &OracleOptions::defaults(2, 10.0)).unwrap();
        assert!(r.points.is_empty());
        assert_eq!(r.signed_count(), 0);
    }

    #[test]
    fn saddle_and_minimum() {
        let vt = VarTable::new(&["x", "y"], &[]).unwrap();
        // Critical points (+-1, 0): a saddle at x = -1 with f = 3, a
        // minimum at x = 1 with f = -1.
        let f = parse_poly("x^3 - 3*x + y^2 + 1", &vt).unwrap();
        let r = find_critical_points(&f, &[], 10.0, 2, &OracleOptions::defaults(2, 10.0)).unwrap();
        assert_eq!(r.points.len(), 2);
        let idx: Vec<usize> = r.points.iter().map(|p| p.morse_index).collect();
        assert_eq!(idx, [1, 0]);
        assert_eq!(r.signed_count(), 0);
    }

    #[test]
    fn lagrange_on_a_circle() {
        let vt = VarTable::new(&["x", "y"], &[]).unwrap();
        let f = parse_poly("x", &vt).unwrap();
        let g = parse_poly("x^2 + y^2 - 1", &vt).unwrap();
        let r = find_critical_points(&f, &[g], 3.0, 2, &OracleOptions::defaults(2, 3.0)).unwrap();
        assert_eq!(r.points.len(), 2);
        // x restricted to the circle: minimum at -1, maximum at 1.
        let idx: Vec<usize> = r.points.iter().map(|p| p.morse_index).collect();
        assert_eq!(idx, [0, 1]);
    }
}
