//! `logdisc <command> <input> [flags]`.

mod input;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::hyper::{maxwell_bifurcation, Hypersurface, WeightSystem};
use crate::inertia::{critical_count, euler_characteristics, InertiaTriple, SymMatrixQ};
use crate::oracle::{find_critical_points, grid_euler, CriticalPointReport, OracleOptions};
use crate::polyring::{PolyMatrix, Polynomial, Rational};

pub use input::{InputSpec, Kind, Model, ParamPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Tables,
    Logfields,
    Discriminant,
    Bifurcation,
    Maxwell,
    Traceforms,
    Euler,
    Count,
    CiTables,
    CiDiscriminant,
    CiCount,
    Gm,
    OracleCheck,
}

#[derive(Debug, Parser)]
#[command(name = "logdisc", version, about = "Logarithmic vector fields, discriminants and trace forms of versal deformations")]
pub struct Args {
    pub command: Command,
    pub input: PathBuf,
    /// Parameter point, e.g. `u=-10,a=-9/10,b=-0.4`.
    #[arg(long)]
    pub params: Option<String>,
    #[arg(long)]
    pub json: bool,
    /// Radius of the ball for `euler` and `oracle-check`.
    #[arg(long, default_value_t = 10.0)]
    pub ball: f64,
    /// Starting grid resolution for `oracle-check`.
    #[arg(long, default_value_t = 64)]
    pub resolution: usize,
    /// Comma-separated basis monomials, replacing the input's basis.
    #[arg(long)]
    pub basis: Option<String>,
}

/// Runs one command; returns the process exit code (0 ok, 1 input error,
/// 2 degenerate parameter point).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = i32::from(e.use_stderr());
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    configure_threads();
    let text = match std::fs::read_to_string(&args.input) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", args.input.display());
            return 1;
        }
    };
    match execute(&args, &text) {
        Ok(v) => {
            let rendered = if args.json {
                serde_json::to_string_pretty(&v).expect("json values serialize")
            } else {
                render_text(&v)
            };
            let _ = writeln!(out, "{rendered}");
            0
        }
        Err(e @ Error::Degenerate(_)) => {
            let _ = writeln!(err, "error: {e}\nhint: perturb the parameter point slightly off the discriminant");
            2
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("LOGDISC_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        // Fails only if a pool already exists, which is harmless.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

/// Parses `text` and runs the command, returning the output object.
pub fn execute(args: &Args, text: &str) -> Result<Value> {
    let mut spec = InputSpec::parse(text)?;
    if let Some(b) = &args.basis {
        spec = spec.with_basis(b.split(',').map(|s| s.trim().to_string()).collect())?;
    }
    let model = spec.build()?;
    let point = match &args.params {
        Some(p) => ParamPoint::parse(p)?,
        None => ParamPoint::default(),
    };
    let vars = model.vars().clone();
    let needs_full = matches!(args.command, Command::Euler | Command::Count | Command::CiCount | Command::OracleCheck);
    let assignment = if needs_full {
        point.full_assignment(&vars)?
    } else {
        point.assignment(&vars)?
    };
    let mut o = Map::new();
    match args.command {
        Command::Tables => match &model {
            Model::Hyper(h) => {
                let h = h.specialize(&assignment)?;
                let t = h.mul_tables()?;
                o.insert("mu".into(), json!(h.mu()));
                o.insert("basis".into(), polys(&h.algebra().basis_polys()));
                o.insert("tau".into(), Value::Array(t.tau.iter().map(matrix).collect()));
                o.insert("zeta".into(), polys(&t.zeta));
                if let Some(w) = h.weights() {
                    o.insert("weights".into(), weights(w));
                }
            }
            Model::CI(..) => return Err(Error::Input("use ci-tables for complete intersections".into())),
        },
        Command::Logfields | Command::Discriminant | Command::Bifurcation | Command::Maxwell | Command::Traceforms => {
            let h = hyper(&model, args.command)?.specialize(&assignment)?;
            let tables = h.mul_tables()?;
            let log = h.log_matrix(&tables)?;
            match args.command {
                Command::Logfields => {
                    o.insert("Sigma".into(), matrix(&log.sigma));
                    o.insert("weighted".into(), json!(log.weighted));
                    o.insert("detSigma".into(), poly(&log.discriminant));
                    o.insert("logQuotients".into(), polys(&log.logarithmic_quotients()?));
                }
                Command::Discriminant => {
                    o.insert("detSigma".into(), poly(&log.discriminant));
                }
                Command::Bifurcation => {
                    let t = tables.trace_matrix()?;
                    o.insert("T".into(), matrix(&t));
                    o.insert("detT".into(), poly(&t.det_bareiss()?));
                }
                Command::Maxwell => {
                    let t = tables.trace_matrix()?;
                    let m = maxwell_bifurcation(&log.discriminant, &t, h.spec().u_index())?;
                    o.insert("detSigma".into(), poly(&log.discriminant));
                    o.insert("detT".into(), poly(&m.bifurcation));
                    o.insert(
                        "maxwell".into(),
                        json!({
                            "uDiscriminant": m.u_discriminant.to_string(),
                            "core": m.core.to_string(),
                            "corePower": m.core_power,
                            "candidate": m.maxwell.to_string(),
                            "constant": m.constant.to_string(),
                        }),
                    );
                }
                _ => {
                    let f = h.trace_forms(&tables, &log)?;
                    o.insert("T".into(), matrix(&f.t));
                    o.insert("BF".into(), matrix(&f.bf));
                    o.insert("h".into(), poly(&f.h));
                    o.insert("BH".into(), matrix(&f.bh));
                    o.insert("BHF".into(), matrix(&f.bhf));
                }
            }
        }
        Command::Euler => {
            let h = hyper(&model, args.command)?.specialize(&assignment)?;
            let r = h.run()?;
            let bh = SymMatrixQ::from_poly_matrix(&r.forms.bh)?;
            let bhf = SymMatrixQ::from_poly_matrix(&r.forms.bhf)?;
            let chi = euler_characteristics(&bh, &bhf, vars.n_x())?;
            o.insert(
                "inertia".into(),
                json!({ "BH": inertia(&bh.inertia()), "BHF": inertia(&bhf.inertia()) }),
            );
            o.insert(
                "chi".into(),
                json!({
                    "chi_ge": chi.chi_ge,
                    "chi_le": chi.chi_le,
                    "chi_eq": chi.chi_eq,
                    "sign_BH": chi.sign_bh,
                    "sign_BHF": chi.sign_bhf,
                    "diff_ge": chi.diff_ge,
                    "diff_le": chi.diff_le,
                    "assumption": ball_assumption(args.ball),
                }),
            );
        }
        Command::Count => {
            let h = hyper(&model, args.command)?.specialize(&assignment)?;
            let r = h.run()?;
            let bf = SymMatrixQ::from_poly_matrix(&r.forms.bf)?;
            let t = SymMatrixQ::from_poly_matrix(&r.forms.t)?;
            o.insert("count".into(), json!(critical_count(&bf)?));
            o.insert("realCriticalPoints".into(), json!(t.inertia().signature()));
            o.insert("inertia".into(), json!({ "BF": inertia(&bf.inertia()), "T": inertia(&t.inertia()) }));
        }
        Command::CiTables | Command::CiDiscriminant | Command::CiCount | Command::Gm => {
            let (ci, given) = model.as_ci()?;
            let ci = ci.specialize(&assignment)?;
            let tables = ci.tables()?;
            match args.command {
                Command::CiTables => {
                    o.insert("mu".into(), json!(ci.mu()));
                    o.insert("basis".into(), polys(&ci.algebra().basis_polys()));
                    o.insert("tau".into(), Value::Array(tables.w.tau.iter().map(matrix).collect()));
                    o.insert("zeta".into(), polys(&tables.w.zeta));
                    o.insert("P".into(), matrix(&tables.p));
                    o.insert("T".into(), matrix(&tables.t));
                }
                Command::CiDiscriminant => {
                    let (dp, dt) = ci.discriminant_and_bifurcation(&tables)?;
                    o.insert("detP".into(), poly(&dp));
                    o.insert("detT".into(), poly(&dt));
                }
                Command::CiCount => {
                    let pt = SymMatrixQ::from_poly_matrix(&tables.p.mul(&tables.t)?)?;
                    let t = SymMatrixQ::from_poly_matrix(&tables.t)?;
                    o.insert("count".into(), json!(critical_count(&pt)?));
                    o.insert("realCriticalPoints".into(), json!(t.inertia().signature()));
                    o.insert("inertia".into(), json!({ "PT": inertia(&pt.inertia()), "T": inertia(&t.inertia()) }));
                }
                _ => {
                    let ws = match given {
                        Some(w) => w,
                        None => ci.spec().derive_weights()?,
                    };
                    let gm = ci.gm_coefficients(&tables, &ws)?;
                    o.insert("basis".into(), polys(&ci.algebra().basis_polys()));
                    o.insert("trM0".into(), json!(gm.trm0));
                    o.insert("weights".into(), weights(&gm.weights));
                    o.insert("normalization".into(), json!(gm.weight_normalization()));
                    o.insert("B".into(), Value::Array(gm.b.iter().map(matrix).collect()));
                    o.insert("R".into(), Value::Array(gm.r.iter().map(matrix).collect()));
                }
            }
        }
        Command::OracleCheck => oracle_check(&model, &assignment, args, &mut o)?,
    }
    Ok(Value::Object(o))
}

fn hyper(model: &Model, cmd: Command) -> Result<&Hypersurface> {
    match model {
        Model::Hyper(h) => Ok(h),
        Model::CI(..) => Err(Error::Input(format!(
            "`{}` needs a hypersurface input",
            cmd.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
        ))),
    }
}

fn ball_assumption(r: f64) -> String {
    format!("ball of radius {r} contains every real critical point and F != 0 on its boundary")
}

fn oracle_check(model: &Model, point: &[(usize, Rational)], args: &Args, o: &mut Map<String, Value>) -> Result<()> {
    let n = model.vars().n_x();
    let (exact, f, constraints, mu, chi) = match model {
        Model::Hyper(h) => {
            let h = h.specialize(point)?;
            let r = h.run()?;
            let bf = SymMatrixQ::from_poly_matrix(&r.forms.bf)?;
            let count = critical_count(&bf)?;
            let chi = if n <= 2 {
                let bh = SymMatrixQ::from_poly_matrix(&r.forms.bh)?;
                let bhf = SymMatrixQ::from_poly_matrix(&r.forms.bhf)?;
                Some(euler_characteristics(&bh, &bhf, n)?)
            } else {
                None
            };
            (count, h.spec().deformation(), Vec::new(), h.mu(), chi)
        }
        Model::CI(c, _) => {
            let c = c.specialize(point)?;
            let tables = c.tables()?;
            let pt = SymMatrixQ::from_poly_matrix(&tables.p.mul(&tables.t)?)?;
            let count = critical_count(&pt)?;
            (count, c.spec().projection(), c.spec().maps()[1..].to_vec(), c.mu(), None)
        }
    };
    let report = find_critical_points(&f, &constraints, args.ball, mu, &OracleOptions::defaults(mu, args.ball))?;
    let mut oracle = Map::new();
    oracle.insert("exactCount".into(), json!(exact));
    oracle.insert("signedCount".into(), json!(report.signed_count()));
    oracle.insert("countsAgree".into(), json!(exact == report.signed_count()));
    oracle.insert("critical".into(), critical_points(&report));
    if let Some(chi) = chi {
        let g = grid_euler(&f, args.ball, args.resolution, args.resolution * 64)?;
        let agree = g.stable && (g.chi_ge, g.chi_le, g.chi_eq) == (chi.chi_ge, chi.chi_le, chi.chi_eq);
        oracle.insert(
            "grid".into(),
            json!({
                "resolution": g.resolution,
                "stable": g.stable,
                "chi_ge": g.chi_ge,
                "chi_le": g.chi_le,
                "chi_eq": g.chi_eq,
            }),
        );
        oracle.insert("chiAgree".into(), json!(agree));
        o.insert("chi".into(), json!({ "chi_ge": chi.chi_ge, "chi_le": chi.chi_le, "chi_eq": chi.chi_eq }));
    }
    o.insert("oracle".into(), Value::Object(oracle));
    Ok(())
}

fn critical_points(r: &CriticalPointReport) -> Value {
    json!({
        "points": r.points.iter().map(|p| json!({
            "coords": p.coords,
            "value": p.value,
            "morseIndex": p.morse_index,
            "hessianSign": p.hessian_sign,
        })).collect::<Vec<_>>(),
        "residualBound": r.residual_bound,
        "starts": r.starts,
        "outsideBall": r.outside_ball,
        "warnings": r.warnings,
    })
}

fn poly(p: &Polynomial) -> Value {
    Value::String(p.to_string())
}

fn polys(ps: &[Polynomial]) -> Value {
    Value::Array(ps.iter().map(poly).collect())
}

fn matrix(m: &PolyMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| polys(m.row(i))).collect())
}

fn inertia(t: &InertiaTriple) -> Value {
    json!({ "n_plus": t.n_plus, "n_minus": t.n_minus, "n_zero": t.n_zero, "signature": t.signature() })
}

fn weights(w: &WeightSystem) -> Value {
    json!({ "x": w.x_weights, "s": w.s_weights, "maps": w.map_weights, "f": w.w_f })
}

fn is_matrix(v: &Value) -> bool {
    matches!(v, Value::Array(rows) if !rows.is_empty() && rows.iter().all(|r| matches!(r, Value::Array(c) if c.iter().all(|x| !x.is_array() && !x.is_object()))))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_into(key: &str, v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                render_into(&format!("{key}{}{k}", if key.is_empty() { "" } else { "." }), x, out);
            }
        }
        Value::Array(items) if is_matrix(v) => {
            out.push(format!("{key}:"));
            for row in items {
                let cells: Vec<String> = row.as_array().into_iter().flatten().map(scalar).collect();
                out.push(format!("  [{}]", cells.join(", ")));
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
            for (i, x) in items.iter().enumerate() {
                render_into(&format!("{key}[{}]", i + 1), x, out);
            }
        }
        Value::Array(items) => {
            let cells: Vec<String> = items.iter().map(scalar).collect();
            out.push(format!("{key}: [{}]", cells.join(", ")));
        }
        other => out.push(format!("{key}: {}", scalar(other))),
    }
}

/// Plain-text rendering: one `key: value` line per scalar, matrices row
/// by row, keys sorted as in the JSON form.
pub fn render_text(v: &Value) -> String {
    let mut lines = Vec::new();
    render_into("", v, &mut lines);
    lines.join("\n")
}
