use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use gw_writhe::field::arith::parse_rational;
use gw_writhe::field::parse::parse_unipoly;
use gw_writhe::field::Rational;
use gw_writhe::gw::{gw_equal, gw_from_matrix, Place, SymBilForm};
use gw_writhe::isotopy::{
    cazanave_class, cazanave_curve, cazanave_phi, embedding_writhe_deg4, isotopic_deg3, isotopic_deg4,
    isotopy_invariant_deg3, EmbeddingDeg3, PointedRationalMap,
};
use gw_writhe::json as j;
use gw_writhe::writhe::{check_embedding, writhe_deg4, writhe_local_sum, RationalCurve, DEFAULT_SEED};
use gw_writhe::{chow, Error};

const SEED_VAR: &str = "GW_WRITHE_SEED";

#[derive(Parser)]
#[command(name = "gw-writhe", version, about = "Exact arithmetic writhe and Grothendieck-Witt invariants")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Writhe of a rational quartic via the Hankel form, or as a sum over secants through a point.
    Writhe {
        curve: PathBuf,
        /// Query point a,b,c,d for the local-sum path.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        /// Run both paths and compare the classes (exit 1 on mismatch).
        #[arg(long)]
        check: bool,
    },
    /// Local writhes of the secants through a point, any degree.
    WritheLocal {
        curve: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Invariants of a symmetric matrix over Q.
    Gw {
        matrix: PathBuf,
        /// `auto` for the relevant places, or a comma-separated list of primes.
        #[arg(long, default_value = "auto")]
        primes: String,
    },
    /// Decide algebraic isotopy of two embeddings of degree 3 or 4.
    Isotopic {
        c1: PathBuf,
        c2: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u8).range(3..=4))]
        degree: u8,
    },
    /// Plücker-linear Chow matrix of a resolution.
    Chow {
        resolution: PathBuf,
        /// Plücker coordinates at which to evaluate the matrix.
        #[arg(long)]
        eval: Option<PathBuf>,
    },
    /// Quartic curve and forms attached to a pointed rational map g/f of degree 3.
    Cazanave {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
}

/// Outcome of a command: the JSON to print and the exit code.
struct Outcome {
    out: Value,
    code: u8,
}

impl Outcome {
    fn ok(out: Value) -> Self {
        Self { out, code: 0 }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::NonSymmetric | Error::ShapeMismatch(_) => 2,
        _ => 3,
    }
}

fn read_json(path: &Path) -> Result<Value, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn read_curve(path: &Path) -> Result<RationalCurve, Error> {
    j::curve_from_json(&read_json(path)?)
}

fn parse_point(s: &str) -> Result<[Rational; 4], Error> {
    let coords: Vec<Rational> = s.split(',').map(|c| parse_rational(c.trim())).collect::<Result<_, _>>()?;
    coords.try_into().map_err(|_| Error::Parse(format!("point {s:?} needs four coordinates")))
}

fn seed() -> Result<u64, Error> {
    match std::env::var(SEED_VAR) {
        Err(_) => Ok(DEFAULT_SEED),
        Ok(s) => {
            let s = s.trim();
            let parsed = match s.strip_prefix("0x") {
                Some(hex) => u64::from_str_radix(hex, 16),
                None => s.parse(),
            };
            parsed.map_err(|_| Error::Parse(format!("{SEED_VAR}={s:?} is not an unsigned integer")))
        }
    }
}

fn point_json(q: &[Rational; 4]) -> Value {
    j::vector_to_json(q)
}

/// Local sum at `q`, or at the first usable seeded random point when `q` is absent.
fn local_sum(c: &RationalCurve, q: Option<[Rational; 4]>, seed: u64) -> Result<(Value, [Rational; 4]), Error> {
    let (r, q) = match q {
        Some(q) => (writhe_local_sum(c, &q, seed)?, q),
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut tries = 0;
            loop {
                let q: [Rational; 4] = [0; 4].map(|_| Rational::from_integer(rng.gen_range(-9i64..=9).into()));
                match writhe_local_sum(c, &q, seed) {
                    Ok(r) => break (r, q),
                    Err(Error::PointOnCurve | Error::DegenerateConfiguration(_) | Error::ZeroInput) if tries < 64 => {
                        tries += 1
                    }
                    Err(e) => return Err(e),
                }
            }
        }
    };
    let mut out = j::writhe_to_json(&r);
    out["point"] = point_json(&q);
    Ok((out, q))
}

fn cmd_writhe(curve: &Path, point: Option<&str>, check: bool) -> Result<Outcome, Error> {
    let c = read_curve(curve)?;
    let q = point.map(parse_point).transpose()?;
    let seed = seed()?;
    if q.is_none() && !check {
        let (gw, det, lambda) = writhe_deg4(&c)?;
        let mut out = j::gw_to_json(&gw);
        out["det"] = j::rational_to_json(&det);
        out["lambda"] = j::matrix_to_json(lambda.matrix());
        return Ok(Outcome::ok(out));
    }
    check_embedding(&c)?;
    if !check {
        return Ok(Outcome::ok(local_sum(&c, q, seed)?.0));
    }
    let (gw, det, lambda) = writhe_deg4(&c)?;
    let mut hankel = j::gw_to_json(&gw);
    hankel["det"] = j::rational_to_json(&det);
    hankel["lambda"] = j::matrix_to_json(lambda.matrix());
    let (local, _) = local_sum(&c, q, seed)?;
    let consistent = gw_equal(&gw, &j::gw_from_json(&local)?);
    Ok(Outcome { out: json!({ "hankel": hankel, "local": local, "consistent": consistent }), code: u8::from(!consistent) })
}

fn cmd_writhe_local(curve: &Path, point: &str) -> Result<Outcome, Error> {
    let c = read_curve(curve)?;
    let q = parse_point(point)?;
    check_embedding(&c)?;
    Ok(Outcome::ok(local_sum(&c, Some(q), seed()?)?.0))
}

fn parse_places(list: &str) -> Result<Option<Vec<Place>>, Error> {
    if list.trim() == "auto" {
        return Ok(None);
    }
    let mut places = Vec::new();
    for tok in list.split(',').map(str::trim) {
        if tok == "inf" {
            places.push(Place::Inf);
            continue;
        }
        let p: u64 = tok.parse().map_err(|_| Error::Parse(format!("bad prime {tok:?}")))?;
        if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
            return Err(Error::Parse(format!("{p} is not prime")));
        }
        places.push(Place::prime(p));
    }
    if !places.contains(&Place::Inf) {
        places.push(Place::Inf);
    }
    Ok(Some(places))
}

fn cmd_gw(matrix: &Path, primes: &str) -> Result<Outcome, Error> {
    let m = j::matrix_from_json(&read_json(matrix)?)?;
    let places = parse_places(primes)?;
    let form = SymBilForm::new(m)?;
    let class = gw_from_matrix(&form)?;
    let mut out = j::gw_to_json(&class);
    out["det"] = j::rational_to_json(&form.det());
    if let Some(places) = places {
        out["hasse"] = places.iter().map(|v| (v.to_string(), json!(class.hasse_at(v)))).collect();
    }
    Ok(Outcome::ok(out))
}

fn cmd_isotopic(c1: &Path, c2: &Path, degree: u8) -> Result<Outcome, Error> {
    let (a, b) = (read_curve(c1)?, read_curve(c2)?);
    for c in [&a, &b] {
        if c.degree() != degree as usize {
            return Err(Error::DegreeConstraint(format!("curve of degree {} given with --degree {degree}", c.degree())));
        }
    }
    let out = if degree == 3 {
        let (e1, e2) = (EmbeddingDeg3::from_curve(a)?, EmbeddingDeg3::from_curve(b)?);
        let iso = isotopic_deg3(&e1, &e2);
        let inv = |e: &EmbeddingDeg3| json!({ "det": j::rational_to_json(&isotopy_invariant_deg3(e)) });
        json!({ "isotopic": iso, "invariants": [inv(&e1), inv(&e2)] })
    } else {
        let iso = isotopic_deg4(&a, &b)?;
        let inv = |c: &RationalCurve| -> Result<Value, Error> {
            let (gw, det) = embedding_writhe_deg4(c)?;
            Ok(json!({ "class": j::gw_to_json(&gw), "det": j::rational_to_json(&det) }))
        };
        json!({ "isotopic": iso, "invariants": [inv(&a)?, inv(&b)?] })
    };
    let code = if out["isotopic"] == json!(true) { 0 } else { 1 };
    Ok(Outcome { out, code })
}

fn cmd_chow(resolution: &Path, eval: Option<&Path>) -> Result<Outcome, Error> {
    let mats = j::resolution_from_json(&read_json(resolution)?)?;
    let gamma = chow::gamma_from_resolution(&mats)?;
    let mut out = j::pluecker_to_json(&gamma);
    if let Some(path) = eval {
        let v = read_json(path)?;
        let w = j::vector_from_json(v.get("coords").unwrap_or(&v))?;
        let m = chow::plucker_eval(&gamma, &w)?;
        out["eval"] = json!({ "coords": j::vector_to_json(&w), "matrix": j::matrix_to_json(&m), "det": j::rational_to_json(&m.det()) });
    }
    Ok(Outcome::ok(out))
}

fn cmd_cazanave(f: &str, g: &str) -> Result<Outcome, Error> {
    let m = PointedRationalMap::new(parse_unipoly(f)?, parse_unipoly(g)?)?;
    let (class, det) = cazanave_class(&m);
    let mut class_json = j::gw_to_json(&class);
    class_json["det"] = j::rational_to_json(&det);
    Ok(Outcome::ok(json!({
        "f": m.f().to_string(),
        "g": m.g().to_string(),
        "wedge": j::vector_to_json(&cazanave_phi(&m)),
        "curve": j::curve_to_json(&cazanave_curve(&m)?),
        "hankel": j::matrix_to_json(m.hankel().matrix()),
        "bezout": j::matrix_to_json(m.bezout().matrix()),
        "class": class_json,
    })))
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    match cli.cmd {
        Cmd::Writhe { curve, point, check } => cmd_writhe(&curve, point.as_deref(), check),
        Cmd::WritheLocal { curve, point } => cmd_writhe_local(&curve, &point),
        Cmd::Gw { matrix, primes } => cmd_gw(&matrix, &primes),
        Cmd::Isotopic { c1, c2, degree } => cmd_isotopic(&c1, &c2, degree),
        Cmd::Chow { resolution, eval } => cmd_chow(&resolution, eval.as_deref()),
        Cmd::Cazanave { f, g } => cmd_cazanave(&f, &g),
    }
}

/// Writes pretty JSON to stdout; a closed pipe is not an error worth reporting.
fn emit(v: &Value) {
    let text = serde_json::to_string_pretty(v).expect("serializable");
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    // clap itself exits with 2 on usage errors.
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome { out, code }) => {
            emit(&out);
            ExitCode::from(code)
        }
        Err(e) => {
            emit(&j::error_to_json(&e));
            eprintln!("gw-writhe: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
