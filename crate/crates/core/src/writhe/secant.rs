//! Secant lines of a rational space curve through a point, as Galois orbits of parameter pairs.

use num::Zero;

use crate::error::{Error, Result};
use crate::field::{MPoly, Rational, UniPoly};
use crate::numfield::{NFElem, NumberField};

use super::curve::RationalCurve;
use super::solve::solve_plane_system;

/// A Galois orbit of secants through `q`.
///
/// The unordered pair `{t₁, t₂}` is encoded by the binary quadratic
/// `e0·X² − e1·X·Y + e2·Y²` vanishing on it. Finite pairs have `e0 = 1`, so
/// `e1 = t₁ + t₂` and `e2 = t₁t₂`. When `at_infinity` is set one parameter is
/// `(0:1)` and the other is the finite value `e2` (with `e1 = 1`).
#[derive(Clone, Debug)]
pub struct SecantDatum {
    pub field: NumberField,
    pub e1: NFElem,
    pub e2: NFElem,
    pub at_infinity: bool,
}

impl SecantDatum {
    /// The finite parameter when the other one is at infinity.
    pub fn finite_root(&self) -> Option<&NFElem> {
        self.at_infinity.then_some(&self.e2)
    }
}

fn affine_param(c: &RationalCurve, var: usize) -> [MPoly; 4] {
    c.affine().map(|p| {
        let mut m = MPoly::zero(2);
        for (i, a) in p.coeffs().iter().enumerate() {
            let mut e = vec![0, 0];
            e[var] = i as u32;
            m.add_term(e, a.clone());
        }
        m
    })
}

fn mpoly_det(m: &[Vec<MPoly>]) -> MPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let nv = m[0][0].nvars();
    let mut out = MPoly::zero(nv);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let sub: Vec<Vec<MPoly>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect()).collect();
        let t = &m[0][j] * &mpoly_det(&sub);
        out = if j % 2 == 0 { &out + &t } else { &out - &t };
    }
    out
}

fn column_subsets(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..16 {
        if mask.count_ones() as usize == k {
            out.push((0..4).filter(|&i| mask & (1 << i) != 0).collect());
        }
    }
    out
}

/// Maximal minors of `[fixed; φ(1,x); φ(1,y)]`, divided by `y − x` and written
/// as ternary forms of degree `n − 1` in `(e0, e1, e2)`.
pub(crate) fn pair_system(c: &RationalCurve, fixed: &[[Rational; 4]]) -> Vec<MPoly> {
    let n = c.degree() as u32;
    let px = affine_param(c, 0);
    let py = affine_param(c, 1);
    let mut rows: Vec<[MPoly; 4]> = fixed.iter().map(|q| q.clone().map(|a| MPoly::constant(2, a))).collect();
    rows.push(px);
    rows.push(py);
    let k = rows.len();
    column_subsets(k)
        .into_iter()
        .map(|cols| {
            let m: Vec<Vec<MPoly>> = rows.iter().map(|r| cols.iter().map(|&j| r[j].clone()).collect()).collect();
            let quot = mpoly_det(&m).div_difference(0, 1).expect("alternating minors are divisible by y − x");
            let sym = quot.to_elementary_symmetric().expect("quotient is symmetric");
            sym.homogenize(n - 1)
        })
        .collect()
}

/// Whether `q` lies on the image of `c`.
pub fn point_on_curve(c: &RationalCurve, q: &[Rational; 4]) -> bool {
    let n = c.degree();
    let at_inf: Vec<Rational> = c.forms().iter().map(|f| f.coeffs()[n].clone()).collect();
    if parallel(&at_inf, q) {
        return true;
    }
    let p = c.affine();
    let mut g = UniPoly::zero();
    for i in 0..4 {
        for j in i + 1..4 {
            let minor = &p[j].scale(&q[i]) - &p[i].scale(&q[j]);
            g = g.gcd(&minor);
        }
    }
    g.is_zero() || g.degree().unwrap_or(0) > 0
}

fn parallel(a: &[Rational], b: &[Rational]) -> bool {
    (0..4).all(|i| (i + 1..4).all(|j| (&a[i] * &b[j] - &a[j] * &b[i]).is_zero()))
}

/// Checks that `c` is a closed embedding: independent forms, no base points,
/// injective and unramified.
pub fn check_embedding(c: &RationalCurve) -> Result<()> {
    c.validate()?;
    let sys = pair_system(c, &[]);
    if sys.iter().all(MPoly::is_zero) {
        return Err(Error::NotEmbedding("the curve is a line or degenerate".into()));
    }
    match solve_plane_system(&sys) {
        Ok(s) if s.is_empty() => Ok(()),
        Ok(_) => Err(Error::NotEmbedding("the parametrization is not injective or not immersive".into())),
        Err(_) => Err(Error::NotEmbedding("positive-dimensional double locus".into())),
    }
}

/// All secant lines through `q`; one datum per Galois orbit.
///
/// Fails with `PointOnCurve` if `q` lies on the curve and with
/// `DegenerateConfiguration` if `q` is on a tangent line or the secants are
/// not all simple.
pub fn secants_through_point(c: &RationalCurve, q: &[Rational; 4]) -> Result<Vec<SecantDatum>> {
    if q.iter().all(Zero::is_zero) {
        return Err(Error::ZeroInput);
    }
    if point_on_curve(c, q) {
        return Err(Error::PointOnCurve);
    }
    let n = c.degree();
    let sys = pair_system(c, &[q.clone()]);
    let expected = (n - 1) * (n.saturating_sub(2)) / 2;
    if expected == 0 {
        return Ok(Vec::new());
    }
    let sols = solve_plane_system(&sys)?;
    let mut out = Vec::new();
    for s in sols {
        let [e0, e1, e2] = s.coords;
        if e0.is_zero() {
            if e1.is_zero() {
                return Err(Error::DegenerateConfiguration("q lies on the tangent line at (0:1)".into()));
            }
            out.push(SecantDatum { field: s.field, e1, e2, at_infinity: true });
        } else {
            let disc = &(&e1 * &e1) - &e2.scale(&Rational::from_integer(4.into()));
            if disc.is_zero() {
                return Err(Error::DegenerateConfiguration("q lies on a tangent line".into()));
            }
            out.push(SecantDatum { field: s.field, e1, e2, at_infinity: false });
        }
    }
    let found: usize = out.iter().map(|s| s.field.degree()).sum();
    if found != expected {
        return Err(Error::DegenerateConfiguration(format!(
            "expected {expected} simple secants through q, found {found}"
        )));
    }
    Ok(out)
}

/// `T² − e1·T + e2`, or the linear factor for a pair through infinity.
pub fn secant_quadratic(s: &SecantDatum) -> String {
    if s.at_infinity {
        format!("{{inf, {}}}", s.e2)
    } else {
        format!("T^2 - ({})*T + ({})", s.e1, s.e2)
    }
}
