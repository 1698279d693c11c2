use std::path::PathBuf;
use std::process::Command;

use gw_writhe::chow::{elliptic_lambda, plucker_eval};
use gw_writhe::field::rat;
use gw_writhe::json::matrix_to_json;
use serde_json::Value;
use tempfile::TempDir;

struct Run {
    code: i32,
    out: Value,
}

fn run(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_gw-writhe"));
    cmd.args(args).env_remove("GW_WRITHE_SEED");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let o = cmd.output().expect("binary runs");
    let text = String::from_utf8(o.stdout).unwrap();
    let out = serde_json::from_str(&text).unwrap_or(Value::Null);
    Run { code: o.status.code().expect("exit code"), out }
}

fn file(dir: &TempDir, name: &str, body: &str) -> String {
    let p: PathBuf = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_owned()
}

const QUARTIC: &str = r#"{"degree": 4, "forms": ["r^4", "r^3*s", "r*s^3", "s^4"]}"#;

#[test]
fn writhe_hankel_path() {
    let d = TempDir::new().unwrap();
    let q = file(&d, "q.json", QUARTIC);
    let r = run(&["writhe", &q], &[]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out["rank"], 3);
    assert_eq!(r.out["signature"], 1);
    assert_eq!(r.out["disc"], "-1");
    assert_eq!(r.out["det"], "-1");
}

#[test]
fn writhe_local_and_check() {
    let d = TempDir::new().unwrap();
    let q = file(&d, "q.json", QUARTIC);
    let r = run(&["writhe", &q, "--point", "1,0,0,1", "--check"], &[]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out["consistent"], true);
    let mut locals: Vec<String> = r.out["local"]["locals"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l["class"]["disc"].as_str().unwrap().to_owned())
        .collect();
    locals.sort();
    assert_eq!(locals, ["-2", "1", "2"]);

    // Without a point the check samples one from the seed.
    let a = run(&["writhe", &q, "--check"], &[("GW_WRITHE_SEED", "7")]);
    let b = run(&["writhe", &q, "--check"], &[("GW_WRITHE_SEED", "7")]);
    assert_eq!(a.code, 0);
    assert_eq!(a.out, b.out);
    assert_eq!(run(&["writhe", &q, "--check"], &[("GW_WRITHE_SEED", "x")]).code, 2);
}

#[test]
fn writhe_errors() {
    let d = TempDir::new().unwrap();
    let bad = file(&d, "bad.json", r#"{"degree": 4, "forms": ["r^4", "r^3*s", "r*s^3", "r*s^3"]}"#);
    let r = run(&["writhe", &bad], &[]);
    assert_eq!(r.code, 3);
    assert_eq!(r.out["error"], "NotEmbedding");

    let q = file(&d, "q.json", QUARTIC);
    let on = run(&["writhe", &q, "--point", "1,0,0,0"], &[]);
    assert_eq!(on.code, 3);
    assert_eq!(on.out["error"], "PointOnCurve");
    let tangent = run(&["writhe", &q, "--point", "0,1,0,0"], &[]);
    assert_eq!(tangent.code, 3);
    assert_eq!(tangent.out["error"], "DegenerateConfiguration");

    let garbled = file(&d, "g.json", r#"{"degree": 4, "forms": ["r^4 +", "r^3*s", "r*s^3", "s^4"]}"#);
    assert_eq!(run(&["writhe", &garbled], &[]).code, 2);
    assert_eq!(run(&["writhe", &q, "--point", "1,2,3"], &[]).code, 2);
    assert_eq!(run(&["writhe", "/nonexistent/curve.json"], &[]).code, 2);
}

#[test]
fn writhe_local_cubic() {
    let d = TempDir::new().unwrap();
    let c = file(&d, "c.json", r#"{"forms": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}"#);
    let r = run(&["writhe-local", &c, "--point", "1,0,0,1"], &[]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out["locals"].as_array().unwrap().len(), 1);
    assert_eq!(r.out["rank"], 1);
}

#[test]
fn gw_command() {
    let d = TempDir::new().unwrap();
    let id = file(&d, "id.json", "[[1,0,0],[0,1,0],[0,0,1]]");
    let r = run(&["gw", &id], &[]);
    assert_eq!((r.code, &r.out["rank"], &r.out["signature"], &r.out["disc"]), (0, &3.into(), &3.into(), &"1".into()));
    assert!(r.out["hasse"].as_object().unwrap().values().all(|v| v == 1));

    let hyp = file(&d, "h.json", r#"{"matrix": [["0","1"],["1","0"]]}"#);
    let r = run(&["gw", &hyp, "--primes", "2,3,5"], &[]);
    assert_eq!(r.out["signature"], 0);
    assert_eq!(r.out["disc"], "-1");
    let hasse = r.out["hasse"].as_object().unwrap();
    assert_eq!(hasse.keys().collect::<Vec<_>>(), ["2", "3", "5", "inf"]);

    // Elliptic Λ at x03 = 1 is 2(<1> + <-1>).
    let w: Vec<_> = [0, 0, 1, 0, 0, 0].map(rat).to_vec();
    let lambda = plucker_eval(&elliptic_lambda(), &w).unwrap();
    let ell = file(&d, "e.json", &matrix_to_json(&lambda).to_string());
    let r = run(&["gw", &ell], &[]);
    assert_eq!((&r.out["rank"], &r.out["signature"], &r.out["disc"]), (&4.into(), &0.into(), &"1".into()));

    let ns = file(&d, "ns.json", "[[0,1],[2,0]]");
    let r = run(&["gw", &ns], &[]);
    assert_eq!(r.code, 2);
    assert_eq!(r.out["error"], "NonSymmetric");
    assert_eq!(run(&["gw", &id, "--primes", "4"], &[]).code, 2);
}

#[test]
fn isotopic_command() {
    let d = TempDir::new().unwrap();
    let q = file(&d, "q.json", QUARTIC);
    // The standard quartic moved by a determinant-1 matrix.
    let moved = file(&d, "m.json", r#"{"degree": 4, "forms": ["r^4 + 2*s^4", "r^3*s + r*s^3", "r*s^3", "-r^4 - s^4"]}"#);
    let two = file(&d, "two.json", r#"{"degree": 4, "forms": ["2*r^4", "r^3*s", "r*s^3", "s^4"]}"#);
    let r = run(&["isotopic", &q, &moved, "--degree", "4"], &[]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out["invariants"].as_array().unwrap().len(), 2);
    assert_eq!(run(&["isotopic", &q, &two, "--degree", "4"], &[]).code, 1);
    assert_eq!(run(&["isotopic", &q, &q, "--degree", "3"], &[]).code, 3);

    let c = file(&d, "c.json", r#"{"degree": 3, "forms": ["r^3", "r^2*s", "r*s^2", "s^3"]}"#);
    let c2 = file(&d, "c2.json", r#"{"degree": 3, "forms": ["2*r^3", "r^2*s", "r*s^2", "s^3"]}"#);
    let c16 = file(&d, "c16.json", r#"{"degree": 3, "forms": ["16*r^3", "r^2*s", "r*s^2", "s^3"]}"#);
    assert_eq!(run(&["isotopic", &c, &c2, "--degree", "3"], &[]).code, 1);
    assert_eq!(run(&["isotopic", &c, &c16, "--degree", "3"], &[]).code, 0);
}

#[test]
fn chow_command() {
    let d = TempDir::new().unwrap();
    // The one-step resolution (x0) has γ = (x0).
    let res = file(&d, "r.json", r#"{"matrices": [{"rows": 1, "cols": 1, "nvars": 2, "coeff": [[["1"]], [["0"]]]}]}"#);
    let w = file(&d, "w.json", r#"{"coords": ["3", "5"]}"#);
    let r = run(&["chow", &res, "--eval", &w], &[]);
    assert_eq!(r.code, 0, "{}", r.out);
    assert_eq!(r.out["eval"]["det"], "3");
    let broken = file(&d, "b.json", r#"{"matrices": [{"rows": 1}]}"#);
    assert_eq!(run(&["chow", &broken], &[]).code, 2);
}

#[test]
fn cazanave_command() {
    let r = run(&["cazanave", "t^3 - t", "1"], &[]);
    assert_eq!(r.code, 0);
    let wedge: Vec<&str> = r.out["wedge"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert_eq!(wedge, ["0", "0", "1", "0", "1"]);
    assert_eq!(r.out["class"]["det"], "-1");
    assert_eq!(run(&["cazanave", "t^3 - t", "t"], &[]).code, 3);
    assert_eq!(run(&["cazanave", "t^3 -", "1"], &[]).code, 2);
}

#[test]
fn output_round_trips() {
    let d = TempDir::new().unwrap();
    let q = file(&d, "q.json", QUARTIC);
    let r = run(&["writhe", &q, "--point", "2,-1,5,1"], &[]);
    assert_eq!(r.code, 0);
    let diag: Vec<Value> = r.out["diag"].as_array().unwrap().clone();
    let n = diag.len();
    let rows: Vec<Vec<Value>> =
        (0..n).map(|i| (0..n).map(|k| if i == k { diag[i].clone() } else { "0".into() }).collect()).collect();
    let m = file(&d, "m.json", &serde_json::to_string(&rows).unwrap());
    let g = run(&["gw", &m], &[]);
    assert_eq!(g.out["diag"], r.out["diag"]);
    for key in ["rank", "signature", "disc", "hasse"] {
        assert_eq!(g.out[key], r.out[key], "{key}");
    }
}
