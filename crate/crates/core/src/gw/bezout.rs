use crate::error::{Error, Result};
use crate::field::{MPoly, Matrix, Rational, UniPoly};

use super::form::SymBilForm;

fn check_pair(f: &UniPoly, g: &UniPoly, n: usize) -> Result<()> {
    if f.degree() != Some(n) || !f.is_monic() {
        return Err(Error::DegreeConstraint(format!("f must be monic of degree {n}")));
    }
    if g.degree().is_some_and(|d| d >= n) {
        return Err(Error::DegreeConstraint(format!("g must have degree < {n}")));
    }
    Ok(())
}

fn lift(p: &UniPoly, var: usize) -> MPoly {
    let mut out = MPoly::zero(2);
    for (k, c) in p.coeffs().iter().enumerate() {
        let mut e = vec![0, 0];
        e[var] = k as u32;
        out.add_term(e, c.clone());
    }
    out
}

/// Coefficients of `(f(x)g(y) − f(y)g(x))/(x − y)`; entry `(i, j)` multiplies `xⁱyʲ`.
pub fn bezout_matrix(f: &UniPoly, g: &UniPoly, n: usize) -> Result<SymBilForm> {
    check_pair(f, g, n)?;
    let num = &(&lift(f, 0) * &lift(g, 1)) - &(&lift(f, 1) * &lift(g, 0));
    // div_difference divides by (y − x).
    let q = -&num.div_difference(0, 1).expect("antisymmetric numerator");
    let mut m = Matrix::zeros(n, n);
    for (e, c) in q.terms() {
        m[(e[0] as usize, e[1] as usize)] = c.clone();
    }
    SymBilForm::new(m)
}

/// The first `count` coefficients `h₀, h₁, …` of `g/f = Σ h_k t^{−k−1}` for monic `f`.
pub fn hankel_coefficients(f: &UniPoly, g: &UniPoly, count: usize) -> Vec<Rational> {
    let n = f.degree().expect("nonzero f");
    let mut h: Vec<Rational> = Vec::with_capacity(count);
    for k in 0..count {
        let mut v = if k < n { g.coeff(n - 1 - k) } else { Rational::default() };
        for i in 1..=k.min(n) {
            v -= f.coeff(n - i) * &h[k - i];
        }
        h.push(v);
    }
    h
}

/// `H_n(f, g) = (h_{i+j})`.
pub fn hankel_matrix(f: &UniPoly, g: &UniPoly, n: usize) -> Result<SymBilForm> {
    check_pair(f, g, n)?;
    let h = hankel_coefficients(f, g, 2 * n - 1);
    let rows = (0..n).map(|i| (0..n).map(|j| h[i + j].clone()).collect()).collect();
    SymBilForm::new(Matrix::from_rows(rows))
}
