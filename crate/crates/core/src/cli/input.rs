//! Flat key-value input files:
//!
//! ```text
//! # comment
//! kind = hypersurface
//! variables = [x1, x2]
//! params = [u, d, c, b]
//! f0 = "x1^3 + x2^3"
//! basis = ["1", "x2", "x1", "x1*x2"]
//! ```
//!
//! Complete intersections use `kind = complete-intersection` and
//! `maps = ["F_1", ..., "F_k"]` instead of `f0`; `basis` is then only an
//! ordering hint. `weights` lists integer weights: of the space variables
//! for a hypersurface, of every variable (space, then parameters) for a
//! complete intersection.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::ci::{CISpec, CompleteIntersection};
use crate::error::{Error, Result};
use crate::hyper::{DeformationSpec, Hypersurface, WeightSystem};
use crate::polyring::{parse_poly, parse_rational, Monomial, Polynomial, Rational, VarTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Hypersurface,
    CompleteIntersection,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Value {
    Scalar(String),
    List(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputSpec {
    pub kind: Kind,
    pub variables: Vec<String>,
    pub params: Vec<String>,
    pub f0: Option<String>,
    pub maps: Vec<String>,
    pub basis: Option<Vec<String>>,
    pub weights: Option<Vec<i64>>,
}

fn input_err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Input(format!("line {line}: {msg}"))
}

/// Splits a bracketed list body on top-level commas, honouring quotes.
fn split_list(body: &str, line: usize) -> Result<Vec<String>> {
    let mut items = Vec::new();
    let mut cur = String::new();
    let mut quoted = false;
    let mut was_quoted = false;
    for ch in body.chars() {
        match ch {
            '"' => {
                quoted = !quoted;
                was_quoted = true;
            }
            ',' if !quoted => {
                items.push(std::mem::take(&mut cur));
            }
            c if quoted || !c.is_whitespace() => cur.push(c),
            _ => {}
        }
    }
    if quoted {
        return Err(input_err(line, "unterminated string"));
    }
    if !cur.is_empty() || was_quoted || !items.is_empty() {
        items.push(cur);
    }
    Ok(items.into_iter().map(|s| s.trim().to_string()).collect())
}

fn strip_comment(line: &str) -> &str {
    let mut quoted = false;
    for (i, ch) in line.char_indices() {
        match ch {
            '"' => quoted = !quoted,
            '#' if !quoted => return &line[..i],
            _ => {}
        }
    }
    line
}

fn parse_entries(text: &str) -> Result<BTreeMap<String, Value>> {
    let mut out = BTreeMap::new();
    let mut lines = text.lines().enumerate();
    while let Some((no, raw)) = lines.next() {
        let lineno = no + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, rest)) = line.split_once('=') else {
            return Err(input_err(lineno, "expected `key = value`"));
        };
        let key = key.trim().to_string();
        let mut rest = rest.trim().to_string();
        let value = if rest.starts_with('[') {
            // lists may span several lines
            while !rest.trim_end().ends_with(']') {
                let Some((_, more)) = lines.next() else {
                    return Err(input_err(lineno, "unterminated list"));
                };
                rest.push(' ');
                rest.push_str(strip_comment(more).trim());
            }
            let body = &rest.trim()[1..rest.trim().len() - 1];
            Value::List(split_list(body, lineno)?)
        } else if let Some(inner) = rest.strip_prefix('"') {
            let Some(inner) = inner.strip_suffix('"') else {
                return Err(input_err(lineno, "unterminated string"));
            };
            Value::Scalar(inner.to_string())
        } else {
            Value::Scalar(rest)
        };
        if out.insert(key.clone(), value).is_some() {
            return Err(input_err(lineno, format!("duplicate key `{key}`")));
        }
    }
    Ok(out)
}

impl InputSpec {
    pub fn parse(text: &str) -> Result<InputSpec> {
        let mut entries = parse_entries(text)?;
        let mut take_list = |k: &str| -> Result<Option<Vec<String>>> {
            match entries.remove(k) {
                None => Ok(None),
                Some(Value::List(v)) => Ok(Some(v)),
                Some(Value::Scalar(_)) => Err(Error::Input(format!("`{k}` must be a bracketed list"))),
            }
        };
        let variables = take_list("variables")?.ok_or_else(|| Error::Input("missing `variables`".into()))?;
        let params = take_list("params")?;
        let maps = take_list("maps")?;
        let basis = take_list("basis")?;
        let weights = take_list("weights")?
            .map(|ws| {
                ws.iter()
                    .map(|w| w.parse::<i64>().map_err(|_| Error::Input(format!("weight `{w}` is not an integer"))))
                    .collect::<Result<Vec<_>>>()
            })
            .transpose()?;
        let scalar = |entries: &mut BTreeMap<String, Value>, k: &str| match entries.remove(k) {
            None => Ok(None),
            Some(Value::Scalar(s)) => Ok(Some(s)),
            Some(Value::List(_)) => Err(Error::Input(format!("`{k}` must be a single value"))),
        };
        let kind = match scalar(&mut entries, "kind")?.as_deref() {
            None | Some("hypersurface") => Kind::Hypersurface,
            Some("complete-intersection") => Kind::CompleteIntersection,
            Some(other) => return Err(Error::Input(format!("unknown kind `{other}`"))),
        };
        let f0 = scalar(&mut entries, "f0")?;
        if let Some(k) = entries.keys().next() {
            return Err(Error::Input(format!("unknown key `{k}`")));
        }
        let spec = match kind {
            Kind::Hypersurface => {
                let basis = basis.ok_or_else(|| Error::Input("a hypersurface needs `basis`".into()))?;
                if f0.is_none() || maps.is_some() {
                    return Err(Error::Input("a hypersurface needs `f0` and no `maps`".into()));
                }
                let params = match params {
                    Some(p) if p.len() != basis.len() => {
                        return Err(Error::Input(format!(
                            "{} parameters for a basis of {} elements",
                            p.len(),
                            basis.len()
                        )))
                    }
                    Some(p) => p,
                    None => std::iter::once("u".to_string())
                        .chain((1..basis.len()).map(|j| format!("s{j}")))
                        .collect(),
                };
                InputSpec { kind, variables, params, f0, maps: Vec::new(), basis: Some(basis), weights }
            }
            Kind::CompleteIntersection => {
                let maps = maps.ok_or_else(|| Error::Input("a complete intersection needs `maps`".into()))?;
                if f0.is_some() {
                    return Err(Error::Input("a complete intersection takes `maps`, not `f0`".into()));
                }
                let params = params.unwrap_or_else(|| vec!["u".to_string()]);
                InputSpec { kind, variables, params, f0, maps, basis, weights }
            }
        };
        Ok(spec)
    }

    pub fn var_table(&self) -> Result<Arc<VarTable>> {
        VarTable::new(&self.variables, &self.params)
    }

    /// Replaces the basis (hypersurface: the deformation basis, paired
    /// with the parameters in order; complete intersection: the hint).
    pub fn with_basis(mut self, basis: Vec<String>) -> Result<InputSpec> {
        if self.kind == Kind::Hypersurface && basis.len() != self.params.len() {
            return Err(Error::Input(format!(
                "--basis has {} elements, the deformation has {} parameters",
                basis.len(),
                self.params.len()
            )));
        }
        self.basis = Some(basis);
        Ok(self)
    }

    pub fn build(&self) -> Result<Model> {
        let vars = self.var_table()?;
        let poly = |s: &str| parse_poly(s, &vars);
        match self.kind {
            Kind::Hypersurface => {
                let f0 = poly(self.f0.as_deref().unwrap_or_default())?;
                let basis = self.basis.iter().flatten().map(|s| poly(s)).collect::<Result<Vec<_>>>()?;
                let spec = DeformationSpec::new(f0.clone(), basis)?;
                let weights = match &self.weights {
                    None => None,
                    Some(w) => {
                        let w_f = f0
                            .weighted_degree(&padded(w, vars.len()))
                            .ok_or_else(|| Error::NotQuasihomogeneous("f0 is zero".into()))?;
                        Some(WeightSystem {
                            x_weights: w.clone(),
                            w_f,
                            s_weights: Vec::new(),
                            map_weights: vec![w_f],
                        })
                    }
                };
                Ok(Model::Hyper(Box::new(Hypersurface::new(spec, weights)?)))
            }
            Kind::CompleteIntersection => {
                let maps = self.maps.iter().map(|s| poly(s)).collect::<Result<Vec<_>>>()?;
                let spec = CISpec::new(maps)?;
                let hint = self.basis_hint(&vars)?;
                let weights = match &self.weights {
                    None => None,
                    Some(w) => Some(ci_weights(&spec, w)?),
                };
                Ok(Model::CI(Box::new(CompleteIntersection::new(spec, hint.as_deref())?), weights))
            }
        }
    }

    fn basis_hint(&self, vars: &Arc<VarTable>) -> Result<Option<Vec<Monomial>>> {
        self.basis
            .as_ref()
            .map(|b| b.iter().map(|s| monomial(s, vars)).collect())
            .transpose()
    }
}

fn padded(w: &[i64], n: usize) -> Vec<i64> {
    let mut v = w.to_vec();
    v.resize(n, 0);
    v
}

fn monomial(s: &str, vars: &Arc<VarTable>) -> Result<Monomial> {
    let p = parse_poly(s, vars)?;
    match p.leading_term() {
        Some((m, c)) if p.num_terms() == 1 && c == &Rational::from_integer(1.into()) => Ok(m.clone()),
        _ => Err(Error::Input(format!("basis element `{s}` is not a monomial"))),
    }
}

fn ci_weights(spec: &CISpec, w: &[i64]) -> Result<WeightSystem> {
    let vars = spec.vars();
    if w.len() != vars.len() {
        return Err(Error::Input(format!(
            "complete intersections need {} weights (space variables, then parameters)",
            vars.len()
        )));
    }
    let u = Polynomial::var(vars, spec.u_index());
    let map_weights = spec
        .maps()
        .iter()
        .enumerate()
        .map(|(q, f)| {
            let f = if q == 0 { f - &u } else { f.clone() };
            f.weighted_degree(w)
                .ok_or_else(|| Error::NotQuasihomogeneous(format!("map {} is zero", q + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    let nx = vars.n_x();
    Ok(WeightSystem {
        x_weights: w[..nx].to_vec(),
        w_f: map_weights[0],
        s_weights: w[nx..].to_vec(),
        map_weights,
    })
}

/// A parsed input, ready for the pipelines.
#[derive(Clone, Debug)]
pub enum Model {
    Hyper(Box<Hypersurface>),
    /// With explicit weights when the input gave them.
    CI(Box<CompleteIntersection>, Option<WeightSystem>),
}

impl Model {
    pub fn vars(&self) -> &Arc<VarTable> {
        match self {
            Model::Hyper(h) => h.spec().vars(),
            Model::CI(c, _) => c.spec().vars(),
        }
    }

    /// The k = 1 form `F_1 - u = -F` of a hypersurface family.
    pub fn as_ci(&self) -> Result<(CompleteIntersection, Option<WeightSystem>)> {
        match self {
            Model::CI(c, w) => Ok(((**c).clone(), w.clone())),
            Model::Hyper(h) => {
                let spec = h.spec();
                let u = Polynomial::var(spec.vars(), spec.u_index());
                let f1 = -&(&spec.deformation() - &u);
                let ci = CompleteIntersection::new(CISpec::new(vec![f1])?, Some(spec.basis()))?;
                let weights = h.weights().map(|w| WeightSystem {
                    map_weights: vec![w.w_f],
                    ..w.clone()
                });
                Ok((ci, weights))
            }
        }
    }
}

/// `name=value` pairs; values are rationals or exact decimals.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParamPoint {
    pub values: BTreeMap<String, Rational>,
}

impl ParamPoint {
    pub fn parse(text: &str) -> Result<ParamPoint> {
        let mut values = BTreeMap::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let Some((k, v)) = item.split_once('=') else {
                return Err(Error::Input(format!("expected name=value, got `{item}`")));
            };
            let k = k.trim().to_string();
            if values.insert(k.clone(), parse_rational(v)?).is_some() {
                return Err(Error::Input(format!("parameter `{k}` given twice")));
            }
        }
        Ok(ParamPoint { values })
    }

    /// Variable indices, checked against the parameters of `vars`.
    pub fn assignment(&self, vars: &VarTable) -> Result<Vec<(usize, Rational)>> {
        self.values
            .iter()
            .map(|(k, v)| match vars.index_of(k) {
                Some(i) if !vars.is_x(i) => Ok((i, v.clone())),
                Some(_) => Err(Error::Input(format!("`{k}` is a space variable, not a parameter"))),
                None => Err(Error::UnknownVariable(k.clone())),
            })
            .collect()
    }

    /// Like `assignment`, but every parameter must be present.
    pub fn full_assignment(&self, vars: &VarTable) -> Result<Vec<(usize, Rational)>> {
        let a = self.assignment(vars)?;
        let missing: Vec<&str> = vars
            .s_vars()
            .iter()
            .filter(|s| !self.values.contains_key(s.as_str()))
            .map(String::as_str)
            .collect();
        if !missing.is_empty() {
            return Err(Error::Input(format!("--params is missing {}", missing.join(", "))));
        }
        Ok(a)
    }
}
