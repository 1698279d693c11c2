//! Common zeros in ℙ² of homogeneous ternary forms with finitely many solutions.
//!
//! Solutions come out as Galois orbits: one number field per orbit together
//! with coordinates in that field, normalized to `(1:a:b)`, `(0:1:w)` or `(0:0:1)`.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{irreducible_factors, MPoly, Rational, UniPoly};
use crate::numfield::{NFElem, NFPoly, NumberField};

#[derive(Clone, Debug)]
pub struct ProjSolution {
    pub field: NumberField,
    pub coords: [NFElem; 3],
}

const LAMBDAS: i64 = 40;

fn lambda_seq() -> impl Iterator<Item = i64> {
    (0..LAMBDAS).map(|k| if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 })
}

fn uni_powers(base: &UniPoly, d: usize) -> Vec<UniPoly> {
    let mut out = vec![UniPoly::one()];
    for _ in 0..d {
        let next = out.last().unwrap() * base;
        out.push(next);
    }
    out
}

fn nf_powers(base: &NFPoly, d: usize) -> Vec<NFPoly> {
    let f = base.coeff(0).field().clone();
    let mut out = vec![NFPoly::new(&f, vec![f.one()])];
    for _ in 0..d {
        let next = out.last().unwrap().mul(base);
        out.push(next);
    }
    out
}

/// `G(e0, e1, e2)` with each variable replaced by a univariate polynomial.
fn subst_uni(g: &MPoly, vals: [&UniPoly; 3], d: usize) -> UniPoly {
    let pw: Vec<Vec<UniPoly>> = vals.iter().map(|v| uni_powers(v, d)).collect();
    let mut out = UniPoly::zero();
    for (e, c) in g.terms() {
        let t = &(&pw[0][e[0] as usize] * &pw[1][e[1] as usize]) * &pw[2][e[2] as usize];
        out = &out + &t.scale(c);
    }
    out
}

fn subst_nf(g: &MPoly, vals: [&NFPoly; 3], d: usize) -> NFPoly {
    let f = vals[0].coeff(0).field().clone();
    let pw: Vec<Vec<NFPoly>> = vals.iter().map(|v| nf_powers(v, d)).collect();
    let mut out = NFPoly::zero(&f);
    for (e, c) in g.terms() {
        let t = pw[0][e[0] as usize].mul(&pw[1][e[1] as usize]).mul(&pw[2][e[2] as usize]);
        let t = NFPoly::new(&f, t.coeffs().iter().map(|x| x.scale(c)).collect());
        out = out.add(&t);
    }
    out
}

fn combine(polys: &[MPoly], weights: &[i64]) -> MPoly {
    polys.iter().zip(weights.iter().cycle()).fold(MPoly::zero(3), |acc, (p, &w)| &acc + &p.scale(&Rational::from_integer(w.into())))
}

const WEIGHTS: [[i64; 5]; 6] = [
    [1, 2, 3, 5, 7],
    [3, -1, 4, -1, 5],
    [2, 7, -1, 8, 2],
    [-5, 3, 5, 1, -3],
    [1, -4, 2, 9, 6],
    [6, 1, -7, 2, 3],
];

/// Resultant in `e2` of two combined affine equations along `e1 = u − λ·e2`, as a polynomial in `u`.
fn projected_resultant(p1: &MPoly, p2: &MPoly, lambda: &Rational, d: usize) -> Result<UniPoly> {
    let npts = d * d + 1;
    let mut xs = Vec::with_capacity(npts);
    let mut ys = Vec::with_capacity(npts);
    let one = UniPoly::one();
    for j in 0..npts {
        let u = Rational::from_integer((j as i64).into());
        let e1 = UniPoly::new(vec![u.clone(), -lambda.clone()]);
        let a = subst_uni(p1, [&one, &e1, &UniPoly::x()], d);
        let b = subst_uni(p2, [&one, &e1, &UniPoly::x()], d);
        ys.push(a.resultant(&b)?);
        xs.push(u);
    }
    Ok(UniPoly::interpolate(&xs, &ys))
}

/// All solutions of `G_k = 0`. Errors when the common zero set is positive-dimensional.
pub fn solve_plane_system(polys: &[MPoly]) -> Result<Vec<ProjSolution>> {
    let polys: Vec<MPoly> = polys.iter().filter(|p| !p.is_zero()).cloned().collect();
    let Some(d) = polys.first().and_then(MPoly::total_degree) else {
        return Err(Error::DegenerateConfiguration("no equations".into()));
    };
    assert!(polys.iter().all(|p| p.nvars() == 3 && p.is_homogeneous(d)));
    let d = d as usize;
    if d == 0 {
        return Ok(Vec::new());
    }
    let mut out = affine_solutions(&polys, d)?;
    out.extend(line_at_infinity(&polys)?);
    Ok(out)
}

fn positive_dim() -> Error {
    Error::DegenerateConfiguration("positive-dimensional solution set".into())
}

fn affine_solutions(polys: &[MPoly], d: usize) -> Result<Vec<ProjSolution>> {
    'lambda: for lam in lambda_seq() {
        let lambda = Rational::from_integer(lam.into());
        let top = [Rational::zero(), -lambda.clone(), Rational::one()];
        // Pairs of combinations whose e2-leading coefficient is a nonzero constant.
        let combos: Vec<MPoly> =
            WEIGHTS.iter().map(|w| combine(polys, w)).filter(|p| !p.eval(&top).is_zero()).collect();
        if combos.len() < 2 {
            continue;
        }
        let mut r = UniPoly::zero();
        for pair in combos.windows(2) {
            let res = projected_resultant(&pair[0], &pair[1], &lambda, d)?;
            r = r.gcd(&res);
            if r.degree() == Some(0) {
                return Ok(Vec::new());
            }
        }
        if r.is_zero() {
            return Err(positive_dim());
        }
        let mut sols = Vec::new();
        for m in irreducible_factors(&r)? {
            let field = NumberField::new_unchecked(m.monic());
            let z = NFPoly::new(&field, vec![field.generator()]);
            let one = NFPoly::new(&field, vec![field.one()]);
            let e2 = NFPoly::new(&field, vec![field.zero(), field.one()]);
            let e1 = z.add(&NFPoly::new(&field, vec![field.zero(), field.from_rational(-lambda.clone())]));
            let mut g = NFPoly::zero(&field);
            for p in polys {
                g = g.gcd(&subst_nf(p, [&one, &e1, &e2], d))?;
            }
            match g.degree() {
                None => return Err(positive_dim()),
                Some(0) => {}
                Some(1) => {
                    let b = -&g.coeff(0);
                    let a = &field.generator() - &b.scale(&lambda);
                    sols.push(ProjSolution { field: field.clone(), coords: [field.one(), a, b] });
                }
                Some(_) => continue 'lambda,
            }
        }
        return Ok(sols);
    }
    Err(Error::DegenerateConfiguration("no separating projection found".into()))
}

fn line_at_infinity(polys: &[MPoly]) -> Result<Vec<ProjSolution>> {
    let mut sols = Vec::new();
    let q = NumberField::rationals();
    let corner = [Rational::zero(), Rational::zero(), Rational::one()];
    if polys.iter().all(|p| p.eval(&corner).is_zero()) {
        sols.push(ProjSolution { field: q.clone(), coords: [q.zero(), q.zero(), q.one()] });
    }
    let mut g = UniPoly::zero();
    for p in polys {
        g = g.gcd(&p.to_univariate(2, &[Rational::zero(), Rational::one(), Rational::zero()]));
    }
    if g.is_zero() {
        return Err(positive_dim());
    }
    if g.degree().unwrap_or(0) > 0 {
        for m in irreducible_factors(&g)? {
            let field = NumberField::new_unchecked(m.monic());
            sols.push(ProjSolution { field: field.clone(), coords: [field.zero(), field.one(), field.generator()] });
        }
    }
    Ok(sols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::arith::rat;

    fn v(i: usize) -> MPoly {
        MPoly::var(3, i)
    }

    fn check(polys: &[MPoly], sols: &[ProjSolution]) {
        for s in sols {
            for p in polys {
                let mut acc = s.field.zero();
                for (e, c) in p.terms() {
                    let t = (0..3).fold(s.field.from_rational(c.clone()), |a, i| &a * &s.coords[i].pow(e[i]));
                    acc = &acc + &t;
                }
                assert!(acc.is_zero(), "{p:?} does not vanish");
            }
        }
    }

    #[test]
    fn two_conics() {
        // x² + y² − 2z², x − y: the points (1:1:1), (1:−1:−1) after scaling.
        let (x, y, z) = (v(1), v(2), v(0));
        let a = &(&(&x * &x) + &(&y * &y)) - &(&z * &z).scale(&rat(2));
        let b = &(&x * &z) - &(&y * &z);
        let b2 = &(&x * &x) - &(&y * &y);
        let polys = vec![a, b, b2];
        let sols = solve_plane_system(&polys).unwrap();
        check(&polys, &sols);
        let total: usize = sols.iter().map(|s| s.field.degree()).sum();
        assert_eq!(total, 2);
    }

    #[test]
    fn irrational_orbit_and_infinity() {
        // e1² − 2·e0² and e2·e0: solutions (1:±√2:0) and (0:0:1).
        let polys = vec![&(&v(1) * &v(1)) - &(&v(0) * &v(0)).scale(&rat(2)), &v(2) * &v(0)];
        let sols = solve_plane_system(&polys).unwrap();
        check(&polys, &sols);
        assert_eq!(sols.len(), 2);
        assert!(sols.iter().any(|s| s.field.degree() == 2));
        assert!(sols.iter().any(|s| s.coords[0].is_zero() && s.coords[1].is_zero()));
    }

    #[test]
    fn positive_dimension_detected() {
        let polys = vec![&v(1) * &v(0), &v(1) * &v(2)];
        assert!(solve_plane_system(&polys).is_err());
    }
}
