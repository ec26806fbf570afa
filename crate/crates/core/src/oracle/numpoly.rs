use crate::error::{Error, Result};
use crate::polyring::{rational_to_f64, Polynomial};

/// Floating-point copy of a polynomial in the space variables only.
#[derive(Clone, Debug)]
pub struct NumPoly {
    n: usize,
    terms: Vec<(Vec<u32>, f64)>,
}

impl NumPoly {
    pub fn new(p: &Polynomial) -> Result<Self> {
        let vars = p.vars();
        let n = vars.n_x();
        let mut terms = Vec::with_capacity(p.num_terms());
        for (m, c) in p.terms() {
            if m.exponents()[n..].iter().any(|&e| e > 0) {
                return Err(Error::Input(format!(
                    "numeric evaluation needs every parameter fixed; `{p}` still has parameters"
                )));
            }
            terms.push((m.exponents()[..n].to_vec(), rational_to_f64(c)));
        }
        Ok(NumPoly { n, terms })
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.eval_with(&Powers::new(x, self.max_degree())).0
    }

    /// `sum |c| |x^m|`: the size of the terms that cancel in `eval`.
    pub fn magnitude(&self, x: &[f64]) -> f64 {
        self.eval_with(&Powers::new(x, self.max_degree())).1
    }

    /// `eval` for two variables without allocating.
    pub fn eval2(&self, x: f64, y: f64) -> f64 {
        debug_assert_eq!(self.n, 2);
        let mut acc = 0.0;
        for (e, c) in &self.terms {
            acc += c * x.powi(e[0] as i32) * y.powi(e[1] as i32);
        }
        acc
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.iter().flat_map(|(e, _)| e.iter().copied()).max().unwrap_or(0)
    }

    /// Value and magnitude from a precomputed power table.
    pub fn eval_with(&self, pw: &Powers) -> (f64, f64) {
        let mut v = 0.0;
        let mut m = 0.0;
        for (e, c) in &self.terms {
            let mut t = *c;
            for (p, &k) in e.iter().enumerate() {
                t *= pw.get(p, k);
            }
            v += t;
            m += t.abs();
        }
        (v, m)
    }
}

/// `x_p^k` for every variable and `k <= degree`.
pub struct Powers {
    stride: usize,
    table: Vec<f64>,
}

impl Powers {
    pub fn new(x: &[f64], degree: u32) -> Self {
        let stride = degree as usize + 1;
        let mut table = Vec::with_capacity(stride * x.len());
        for &v in x {
            let mut acc = 1.0;
            for _ in 0..stride {
                table.push(acc);
                acc *= v;
            }
        }
        Powers { stride, table }
    }

    fn get(&self, p: usize, k: u32) -> f64 {
        self.table[p * self.stride + k as usize]
    }
}

/// A polynomial with its gradient and Hessian, all numeric.
#[derive(Clone, Debug)]
pub struct NumFunction {
    pub f: NumPoly,
    pub grad: Vec<NumPoly>,
    pub hess: Vec<Vec<NumPoly>>,
}

impl NumFunction {
    pub fn new(p: &Polynomial) -> Result<Self> {
        let n = p.vars().n_x();
        let grad_exact: Vec<Polynomial> = (0..n).map(|i| p.derivative(i)).collect();
        let hess = grad_exact
            .iter()
            .map(|g| (0..n).map(|j| NumPoly::new(&g.derivative(j))).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(NumFunction {
            f: NumPoly::new(p)?,
            grad: grad_exact.iter().map(NumPoly::new).collect::<Result<_>>()?,
            hess,
        })
    }

    pub fn powers(&self, x: &[f64]) -> Powers {
        Powers::new(x, self.f.max_degree())
    }

    pub fn gradient(&self, x: &[f64]) -> Vec<f64> {
        let pw = self.powers(x);
        self.grad.iter().map(|g| g.eval_with(&pw).0).collect()
    }

    pub fn hessian(&self, x: &[f64]) -> Vec<Vec<f64>> {
        let pw = self.powers(x);
        self.hess.iter().map(|r| r.iter().map(|h| h.eval_with(&pw).0).collect()).collect()
    }
}
