use logdisc_core::cli::run;
use logdisc_core::polyring::{parse_poly, VarTable};
use serde_json::Value;

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["logdisc"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.push("--json");
    let (code, out, err) = call(&a);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn a1_discriminant() {
    let v = json(&["discriminant", &fixture("a1.ls")]);
    assert_eq!(v["detSigma"], "2*u");
}

#[test]
fn logfields_rows() {
    let (code, out, _) = call(&["logfields", &fixture("example1.ls")]);
    assert_eq!(code, 0);
    assert!(out.contains("  [3*u, 2*d, 2*c, b]"));
    assert!(out.contains("weighted: true"));
}

#[test]
fn json_round_trip_and_determinism() {
    let path = fixture("example1.ls");
    let (_, first, _) = call(&["traceforms", &path, "--json"]);
    let (_, second, _) = call(&["traceforms", &path, "--json"]);
    assert_eq!(first, second);
    let v: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", first);
    // Polynomial strings are canonical: reparsing prints them unchanged.
    let vt = VarTable::new(&["x1", "x2"], &["u", "d", "c", "b"]).unwrap();
    for row in v["BH"].as_array().unwrap() {
        for cell in row.as_array().unwrap() {
            let s = cell.as_str().unwrap();
            assert_eq!(parse_poly(s, &vt).unwrap().to_string(), s);
        }
    }
}

#[test]
fn euler_and_oracle_agree() {
    let params = "--params=a=-9/10,b=-2/5,c=1/10,d=1/10,g=-1/10,u=-10";
    let e = json(&["euler", &fixture("e6.ls"), params]);
    let chi = &e["chi"];
    let (ge, le, eq) = (chi["chi_ge"].as_i64().unwrap(), chi["chi_le"].as_i64().unwrap(), chi["chi_eq"].as_i64().unwrap());
    assert_eq!(ge + le - eq, 1);
    let o = json(&["oracle-check", &fixture("e6.ls"), params]);
    assert_eq!(o["oracle"]["countsAgree"], true);
    assert_eq!(o["oracle"]["chiAgree"], true);
    assert_eq!(o["oracle"]["exactCount"], -2);
}

#[test]
fn decimal_parameters_are_exact() {
    let a = json(&["count", &fixture("e6.ls"), "--params", "a=-0.9,b=-0.4,c=0.1,d=0.1,g=-0.1,u=-10"]);
    let b = json(&["count", &fixture("e6.ls"), "--params", "a=-9/10,b=-2/5,c=1/10,d=1/10,g=-1/10,u=-10"]);
    assert_eq!(a, b);
}

#[test]
fn complete_intersection_commands() {
    let v = json(&["ci-discriminant", &fixture("cusp_curve.ls")]);
    assert_eq!(v["detP"], "4/27*t^3 + u^2");
    let hs = json(&["ci-discriminant", &fixture("example1.ls")]);
    let ci = json(&["ci-discriminant", &fixture("example1_ci.ls")]);
    assert_eq!(hs, ci);
    let gm = json(&["gm", &fixture("cusp_curve.ls")]);
    assert_eq!(gm["trM0"], 6);
    let count = json(&["ci-count", &fixture("cusp_curve.ls"), "--params", "u=1/2,t=-3"]);
    assert_eq!(count["count"], 0);
    assert_eq!(count["realCriticalPoints"], 2);
}

#[test]
fn basis_override() {
    let v = json(&["tables", &fixture("example1.ls"), "--basis", "1,x1,x2,x1*x2"]);
    assert_eq!(v["basis"], serde_json::json!(["1", "x1", "x2", "x1*x2"]));
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["count", &fixture("a1.ls"), "--params", "u=0"]).0, 2);
    assert_eq!(call(&["count", &fixture("a1.ls"), "--params", "u=1"]).0, 0);
    assert_eq!(call(&["count", &fixture("a1.ls")]).0, 1);
    assert_eq!(call(&["count", &fixture("a1.ls"), "--params", "v=1"]).0, 1);
    assert_eq!(call(&["logfields", &fixture("cusp_curve.ls")]).0, 1);
    assert_eq!(call(&["frobnicate", &fixture("a1.ls")]).0, 1);
    assert_eq!(call(&["tables", "/nonexistent.ls"]).0, 1);
    assert_eq!(call(&["--help"]).0, 0);
}
