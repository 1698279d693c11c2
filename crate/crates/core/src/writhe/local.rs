use std::fmt;

use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::arith::is_square;
use crate::field::{Matrix, Rational};
use crate::gw::{trace_form, GWClass};
use crate::numfield::{quad_reduce, NFElem, QuadExtElem};

use super::curve::RationalCurve;
use super::secant::{secants_through_point, SecantDatum};

pub const DEFAULT_SEED: u64 = 0x5717_4e;

/// An affine chart `x ↦ (m₁(x)/ℓ(x), m₂(x)/ℓ(x), m₃(x)/ℓ(x))`.
///
/// Rows of the matrix are `ℓ, m₁, m₂, m₃`; its determinant must be a nonzero square
/// so that the chart preserves the orientation class.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Chart {
    matrix: Matrix,
}

impl Chart {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if matrix.rows() != 4 || matrix.cols() != 4 {
            return Err(Error::ShapeMismatch("a chart is a 4×4 matrix".into()));
        }
        let d = matrix.det();
        if d.is_zero() || !is_square(&d) {
            return Err(Error::ChartFailure("chart determinant is not a nonzero square".into()));
        }
        Ok(Self { matrix })
    }

    pub fn identity() -> Self {
        Self { matrix: Matrix::identity(4) }
    }

    /// `ℓ = (1, r₁, r₂, r₃)` with `mᵢ = xᵢ`; determinant 1.
    pub fn with_ell(r: [i64; 3]) -> Self {
        let mut m = Matrix::identity(4);
        for i in 0..3 {
            m[(0, i + 1)] = Rational::from_integer(r[i].into());
        }
        Self { matrix: m }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    fn apply(&self, p: &[QuadExtElem]) -> Vec<QuadExtElem> {
        (0..4)
            .map(|i| {
                let mut acc = p[0].scale(&Rational::zero());
                for j in 0..4 {
                    acc = &acc + &p[j].scale(&self.matrix[(i, j)]);
                }
                acc
            })
            .collect()
    }
}

/// The local contribution of one Galois orbit of secants.
#[derive(Clone, Debug)]
pub struct LocalWrithe {
    pub secant: SecantDatum,
    /// `det[ṽ, ũ, w̃]` with `ṽ`, `w̃` taken at `a` and `b`; depends on the chart.
    pub frame_det: NFElem,
    /// The frame determinant with `ṽ`, `w̃` transported to `q`; its class is chart independent.
    pub det: NFElem,
    pub class: GWClass,
}

#[derive(Clone, Debug)]
pub struct WritheResult {
    pub gw: GWClass,
    pub det: Rational,
    pub locals: Vec<LocalWrithe>,
}

impl fmt::Display for WritheResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.gw)
    }
}

/// Points, tangent vectors and the base point, lifted to `F[T]/(T² − e₁T + e₂)`.
struct Setup {
    a: Vec<QuadExtElem>,
    da: Vec<QuadExtElem>,
    b: Vec<QuadExtElem>,
    db: Vec<QuadExtElem>,
    q: Vec<QuadExtElem>,
}

fn horner(coeffs: &[Rational], x: &QuadExtElem) -> QuadExtElem {
    coeffs.iter().rev().fold(x.scale(&Rational::zero()), |acc, c| &(&acc * x) + &x.from_rational(c))
}

fn setup(c: &RationalCurve, q: &[Rational; 4], s: &SecantDatum) -> Setup {
    let f = &s.field;
    let affine = c.affine();
    let derivs: Vec<_> = affine.iter().map(|p| p.derivative()).collect();
    if s.at_infinity {
        let (z0, z1) = (f.zero(), f.zero());
        let t = QuadExtElem::gen(&z0, &z1).constant(s.e2.clone());
        let unit = t.scale(&Rational::zero());
        let konst = |r: &Rational| unit.from_rational(r);
        let n = c.degree();
        Setup {
            a: affine.iter().map(|p| horner(p.coeffs(), &t)).collect(),
            da: derivs.iter().map(|p| horner(p.coeffs(), &t)).collect(),
            // t̄ = r/s near (0:1), parametrized as φ(−t̄, 1)
            b: c.forms().iter().map(|p| konst(&p.coeffs()[n])).collect(),
            db: c.forms().iter().map(|p| konst(&-p.coeffs()[n - 1].clone())).collect(),
            q: q.iter().map(konst).collect(),
        }
    } else {
        let a = QuadExtElem::gen(&s.e1, &s.e2);
        let b = a.conj();
        Setup {
            a: affine.iter().map(|p| horner(p.coeffs(), &a)).collect(),
            da: derivs.iter().map(|p| horner(p.coeffs(), &a)).collect(),
            b: affine.iter().map(|p| horner(p.coeffs(), &b)).collect(),
            db: derivs.iter().map(|p| horner(p.coeffs(), &b)).collect(),
            q: q.iter().map(|r| a.from_rational(r)).collect(),
        }
    }
}

fn chart_ok(chart: &Chart, pts: &[&[QuadExtElem]]) -> bool {
    pts.iter().all(|p| chart.apply(p)[0].is_unit())
}

/// The first usable chart: the identity, then `ℓ = x₀ + x₃`, then seeded random `ℓ`.
pub fn select_chart(points: &[&[QuadExtElem]], seed: u64) -> Result<Chart> {
    let mut cands = vec![Chart::identity(), Chart::with_ell([0, 0, 1])];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..64 {
        cands.push(Chart::with_ell([rng.gen_range(-5..=5), rng.gen_range(-5..=5), rng.gen_range(-5..=5)]));
    }
    cands
        .into_iter()
        .find(|ch| chart_ok(ch, points))
        .ok_or_else(|| Error::ChartFailure("no chart avoids the secant's points".into()))
}

/// `d/dt (m(Φ)/ℓ(Φ))` for `Φ` in chart coordinates.
fn chart_tangent(p: &[QuadExtElem], dp: &[QuadExtElem]) -> Result<Vec<QuadExtElem>> {
    let l2inv = (&p[0] * &p[0]).inv()?;
    Ok((1..4).map(|k| &(&(&dp[k] * &p[0]) - &(&p[k] * &dp[0])) * &l2inv).collect())
}

fn det3(m: [&[QuadExtElem]; 3]) -> QuadExtElem {
    // columns m[0], m[1], m[2]
    let e = |c: usize, r: usize| &m[c][r];
    let t1 = e(0, 0) * &(&(e(1, 1) * e(2, 2)) - &(e(1, 2) * e(2, 1)));
    let t2 = e(1, 0) * &(&(e(0, 1) * e(2, 2)) - &(e(0, 2) * e(2, 1)));
    let t3 = e(2, 0) * &(&(e(0, 1) * e(1, 2)) - &(e(0, 2) * e(1, 1)));
    &(&t1 - &t2) + &t3
}

/// Frame determinant and transport factor, both still in `F[T]`.
fn frame(st: &Setup, chart: &Chart) -> Result<(QuadExtElem, QuadExtElem)> {
    if !chart_ok(chart, &[&st.a, &st.b, &st.q]) {
        return Err(Error::ChartFailure("ℓ vanishes at a point of the secant".into()));
    }
    let (a, da, b, db, qq) =
        (chart.apply(&st.a), chart.apply(&st.da), chart.apply(&st.b), chart.apply(&st.db), chart.apply(&st.q));
    let v = chart_tangent(&a, &da)?;
    let w = chart_tangent(&b, &db)?;
    // q = α·a + β·b, solved on a pair of coordinates with a unit minor.
    let (i, j, minor) = (0..4)
        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, &(&a[i] * &b[j]) - &(&a[j] * &b[i])))
        .find(|(_, _, m)| m.is_unit())
        .ok_or_else(|| Error::ChartFailure("secant points are not independent".into()))?;
    let minv = minor.inv()?;
    let alpha = &(&(&qq[i] * &b[j]) - &(&qq[j] * &b[i])) * &minv;
    let beta = &(&(&a[i] * &qq[j]) - &(&a[j] * &qq[i])) * &minv;
    for k in 0..4 {
        if !(&(&(&alpha * &a[k]) + &(&beta * &b[k])) - &qq[k]).is_zero() {
            return Err(Error::ChartFailure("q is not on the secant".into()));
        }
    }
    // Direction from q towards b along the secant.
    let lq2inv = (&qq[0] * &qq[0]).inv()?;
    let u: Vec<QuadExtElem> =
        (1..4).map(|k| &(&beta * &(&(&b[k] * &qq[0]) - &(&qq[k] * &b[0]))) * &lq2inv).collect();
    // Moving ṽ, w̃ from a, b to q along the secant scales them by ℓ(A)/ℓ(q), ℓ(B)/ℓ(q).
    let transport = &(&(&alpha * &a[0]) * &(&beta * &b[0])) * &lq2inv;
    Ok((det3([&v, &u, &w]), transport))
}

/// Local writhe in a given chart.
pub fn local_writhe_in_chart(c: &RationalCurve, q: &[Rational; 4], s: &SecantDatum, chart: &Chart) -> Result<LocalWrithe> {
    let (d, transport) = frame(&setup(c, q, s), chart)?;
    let d = quad_reduce(&d)?;
    let transport = quad_reduce(&transport)?;
    if d.is_zero() {
        return Err(Error::ChartFailure("degenerate frame on the secant".into()));
    }
    let det = &d * &transport;
    let class = trace_form(&s.field, &det)?;
    Ok(LocalWrithe { secant: s.clone(), frame_det: d, det, class })
}

pub fn local_writhe_seeded(c: &RationalCurve, q: &[Rational; 4], s: &SecantDatum, seed: u64) -> Result<LocalWrithe> {
    let st = setup(c, q, s);
    let chart = select_chart(&[&st.a, &st.b, &st.q], seed)?;
    local_writhe_in_chart(c, q, s, &chart)
}

pub fn local_writhe(c: &RationalCurve, q: &[Rational; 4], s: &SecantDatum) -> Result<LocalWrithe> {
    local_writhe_seeded(c, q, s, DEFAULT_SEED)
}

/// Sum of local writhes over all secants through `q`.
pub fn writhe_local_sum(c: &RationalCurve, q: &[Rational; 4], seed: u64) -> Result<WritheResult> {
    let secants = secants_through_point(c, q)?;
    let mut locals = secants.iter().map(|s| local_writhe_seeded(c, q, s, seed)).collect::<Result<Vec<_>>>()?;
    // Deterministic order, independent of how the solver enumerated the orbits.
    locals.sort_by_cached_key(|l| {
        let s = &l.secant;
        (s.field.min_poly().fmt_in("z"), s.at_infinity, s.e1.to_string(), s.e2.to_string())
    });
    let gw = locals.iter().fold(GWClass::zero(), |acc, l| acc.sum(&l.class));
    let det = gw.diag().iter().fold(Rational::one(), |acc, x| acc * x);
    Ok(WritheResult { gw, det, locals })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::arith::{is_square, rat};
    use crate::gw::gw_equal;
    use crate::writhe::curve::writhe_deg4;

    fn q(v: [i64; 4]) -> [Rational; 4] {
        v.map(rat)
    }

    fn same_class(a: &Rational, b: i64) -> bool {
        is_square(&(a / rat(b)))
    }

    #[test]
    fn worked_quartic_example() {
        let c = RationalCurve::standard_quartic();
        let qq = q([1, 0, 0, 1]);
        let secants = secants_through_point(&c, &qq).unwrap();
        for s in &secants {
            let l = local_writhe(&c, &qq, s).unwrap();
            let d = l.frame_det.as_rational().unwrap();
            assert!(is_square(&(&l.det.as_rational().unwrap() / &d)));
            if s.at_infinity {
                assert!(same_class(&d, 1), "{d}");
                assert_eq!(d, Rational::new(1.into(), 4.into()));
            } else if s.e2.as_rational().unwrap() == rat(-1) {
                assert_eq!(d, rat(-8));
            } else {
                assert_eq!(d, rat(8));
            }
        }
        let sum = writhe_local_sum(&c, &qq, DEFAULT_SEED).unwrap();
        assert!(gw_equal(&sum.gw, &GWClass::from_i64(&[-2, 2, 1])));
        assert!(gw_equal(&sum.gw, &writhe_deg4(&c).unwrap().0));
    }

    #[test]
    fn chart_choice_does_not_matter() {
        let c = RationalCurve::standard_quartic();
        let qq = q([1, 0, 0, 1]);
        for s in secants_through_point(&c, &qq).unwrap() {
            let base = local_writhe(&c, &qq, &s).unwrap();
            for r in [[1, 2, 3], [-2, 0, 5], [3, -1, 1]] {
                if let Ok(l) = local_writhe_in_chart(&c, &qq, &s, &Chart::with_ell(r)) {
                    assert!(gw_equal(&l.class, &base.class));
                }
            }
        }
    }

    #[test]
    fn chart_needs_square_det() {
        assert!(Chart::new(Matrix::diagonal(&[rat(2), rat(1), rat(1), rat(1)])).is_err());
        assert!(Chart::new(Matrix::diagonal(&[rat(4), rat(1), rat(1), rat(1)])).is_ok());
    }

    #[test]
    fn swapping_the_secant_points_keeps_the_determinant() {
        let c = RationalCurve::standard_quartic();
        for point in [[1, 0, 0, 1], [2, -1, 5, 1], [0, 1, 1, 0], [3, 1, -2, 7]] {
            let qp = q(point);
            for s in secants_through_point(&c, &qp).unwrap().iter().filter(|s| !s.at_infinity) {
                let st = setup(&c, &qp, s);
                let chart = select_chart(&[&st.a, &st.b, &st.q], DEFAULT_SEED).unwrap();
                let swapped = Setup { a: st.b.clone(), da: st.db.clone(), b: st.a.clone(), db: st.da.clone(), q: st.q.clone() };
                let (d1, t1) = frame(&st, &chart).unwrap();
                let (d2, t2) = frame(&swapped, &chart).unwrap();
                assert_eq!(d1, d2);
                assert_eq!(t1, t2);
            }
        }
    }
}
