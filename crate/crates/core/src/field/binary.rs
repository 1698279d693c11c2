//! Binary forms in `r, s`.

use std::fmt;

use num::Zero;

use super::arith::Rational;
use super::mpoly::MPoly;
use super::poly::UniPoly;
use crate::error::{Error, Result};

/// Homogeneous form of degree `n`; `coeffs[i]` multiplies `r^{n−i}·s^i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    degree: usize,
    coeffs: Vec<Rational>,
}

impl BinaryForm {
    pub fn new(degree: usize, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != degree + 1 {
            return Err(Error::ShapeMismatch(format!(
                "binary form of degree {degree} needs {} coefficients, got {}",
                degree + 1,
                coeffs.len()
            )));
        }
        Ok(Self { degree, coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        let c: Vec<Rational> = coeffs.iter().map(|&x| Rational::from_integer(x.into())).collect();
        Self { degree: c.len() - 1, coeffs: c }
    }

    /// `c · r^{n−i} s^i`.
    pub fn monomial(degree: usize, i: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[i] = c;
        Self { degree, coeffs }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { degree: self.degree, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn eval(&self, r: &Rational, s: &Rational) -> Rational {
        let n = self.degree;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * num::pow::pow(r.clone(), n - i) * num::pow::pow(s.clone(), i))
            .sum()
    }

    /// The chart `r = 1`, `t = s/r`: coefficient `i` becomes the coefficient of `tⁱ`.
    pub fn dehomogenize(&self) -> UniPoly {
        UniPoly::new(self.coeffs.clone())
    }

    /// Interprets a polynomial in `(r, s)` (two variables, in that order) as a form of degree `n`.
    pub fn from_mpoly(p: &MPoly, n: usize) -> Result<Self> {
        if p.nvars() != 2 || !p.is_homogeneous(n as u32) {
            return Err(Error::Parse(format!("not a binary form of degree {n}")));
        }
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (e, c) in p.terms() {
            coeffs[e[1] as usize] = c.clone();
        }
        Ok(Self { degree: n, coeffs })
    }

    pub fn to_mpoly(&self) -> MPoly {
        let mut p = MPoly::zero(2);
        for (i, c) in self.coeffs.iter().enumerate() {
            p.add_term(vec![(self.degree - i) as u32, i as u32], c.clone());
        }
        p
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_mpoly().fmt_with(&["r", "s"]))
    }
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryForm({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::arith::rat;

    #[test]
    fn shape_and_chart() {
        assert!(BinaryForm::new(2, vec![rat(1)]).is_err());
        let f = BinaryForm::from_i64(&[1, 0, -2, 3]);
        assert_eq!(f.dehomogenize(), UniPoly::from_i64(&[1, 0, -2, 3]));
        assert_eq!(f.eval(&rat(2), &rat(1)), rat(8 - 4 + 3));
        assert_eq!(f.to_string(), "r^3 - 2*r*s^2 + 3*s^3");
        assert_eq!(BinaryForm::from_mpoly(&f.to_mpoly(), 3).unwrap(), f);
    }
}
