//! Dense univariate polynomials over ℚ.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use super::arith::Rational;
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Polynomial in `t` with rational coefficients, lowest degree first.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and has degree `None`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The variable `t`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().recip();
        self.scale(&inv)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let inv = d.lc().recip();
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &inv;
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dj;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Self::new(q), Self::new(r)))
    }

    pub fn rem(&self, d: &UniPoly) -> Result<UniPoly> {
        Ok(self.div_rem(d)?.1)
    }

    /// Exact quotient, `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.div_rem(d).ok()?;
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Resultant with the Sylvester-determinant convention
    /// `Res(f, g) = lc(f)^{deg g} ∏ g(α)` over the roots α of `f`.
    ///
    /// Computed by the Euclidean recursion
    /// `Res(f, g) = (-1)^{mn} lc(g)^{m - deg r} Res(g, r)` with `r = f mod g`.
    pub fn resultant(&self, g: &UniPoly) -> Result<Rational> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut f = self.clone();
        let mut g = g.clone();
        let mut acc = Rational::one();
        loop {
            let m = f.degree().expect("nonzero");
            let Some(n) = g.degree() else {
                return Ok(if m == 0 { acc } else { Rational::zero() });
            };
            if m == 0 {
                return Ok(acc * num::pow::pow(f.lc(), n));
            }
            if n == 0 {
                return Ok(acc * num::pow::pow(g.lc(), m));
            }
            // Res(f, g) = (-1)^{mn} Res(g, f), and Res(g, f) = lc(g)^{m - deg r} Res(g, r).
            let r = f.rem(&g)?;
            if (m * n) % 2 == 1 {
                acc = -acc;
            }
            match r.degree() {
                None => return Ok(Rational::zero()),
                Some(dr) => {
                    acc *= num::pow::pow(g.lc(), m - dr);
                }
            }
            f = g;
            g = r;
        }
    }

    /// Multiplies through by the lcm of denominators and divides by the
    /// content, returning `(c, p)` with `self = c·p`, `p` primitive in ℤ[t]
    /// and `lc(p) > 0`.
    pub fn primitive_integer_part(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| num::integer::lcm(acc, c.denom().clone()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let mut g = ints
            .iter()
            .fold(BigInt::zero(), |acc, c| num::integer::gcd(acc, c.clone()));
        if ints.last().expect("nonzero").is_negative() {
            g = -g;
        }
        let prim = ints.iter().map(|c| c / &g).collect();
        (Rational::new(g, l), prim)
    }

    pub fn from_integers(c: &[BigInt]) -> Self {
        Self::new(c.iter().map(|x| Rational::from_integer(x.clone())).collect())
    }

    /// Sylvester matrix of `f` and `g` read with formal degrees `m ≥ deg f`
    /// and `n ≥ deg g`.
    pub fn sylvester_matrix(f: &UniPoly, m: usize, g: &UniPoly, n: usize) -> Matrix {
        let size = m + n;
        let mut s = Matrix::zeros(size, size);
        for i in 0..n {
            for j in 0..=m {
                s[(i, i + j)] = f.coeff(m - j);
            }
        }
        for i in 0..m {
            for j in 0..=n {
                s[(n + i, i + j)] = g.coeff(n - j);
            }
        }
        s
    }

    /// Substitutes `t ↦ a·t + b`.
    pub fn compose_linear(&self, a: &Rational, b: &Rational) -> UniPoly {
        let lin = UniPoly::new(vec![b.clone(), a.clone()]);
        self.coeffs
            .iter()
            .rev()
            .fold(UniPoly::zero(), |acc, c| &(&acc * &lin) + &UniPoly::constant(c.clone()))
    }

    /// Interpolates the unique polynomial of degree `< xs.len()` through the points.
    pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> UniPoly {
        assert_eq!(xs.len(), ys.len());
        // Newton divided differences.
        let n = xs.len();
        let mut coef: Vec<Rational> = ys.to_vec();
        for j in 1..n {
            for i in (j..n).rev() {
                coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
            }
        }
        let mut p = UniPoly::zero();
        for i in (0..n).rev() {
            let lin = UniPoly::new(vec![-xs[i].clone(), Rational::one()]);
            p = &(&p * &lin) + &UniPoly::constant(coef[i].clone());
        }
        p
    }

    pub fn fmt_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{a}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_in("t"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::arith::{rat, ratio};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_i64(c)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        assert_eq!(p(&[0, 0, 0, 1]).gcd(&p(&[1])), UniPoly::one());
        // 6t² + t − 1 = (2t + 1)(3t − 1)
        let g = p(&[-1, 1, 6]).gcd(&p(&[1, 2]));
        assert_eq!(g, UniPoly::new(vec![ratio(1, 2), rat(1)]));
        assert_eq!(UniPoly::zero().gcd(&UniPoly::zero()), UniPoly::zero());
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(p(&[-1, 1]).resultant(&p(&[-2, 1])).unwrap(), rat(-1));
        assert_eq!(p(&[1, 0, 1]).resultant(&p(&[0, 1])).unwrap(), rat(1));
        let f = p(&[3, -1, 0, 2]);
        assert_eq!(f.resultant(&f).unwrap(), rat(0));
        assert_eq!(UniPoly::zero().resultant(&f), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn division_identity() {
        let a = p(&[5, -3, 0, 2, 7]);
        let d = p(&[1, 0, 3]);
        let (q, r) = a.div_rem(&d).unwrap();
        assert_eq!(&(&q * &d) + &r, a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = p(&[2, -1, 0, 5]);
        let xs: Vec<_> = (0..4).map(rat).collect();
        let ys: Vec<_> = xs.iter().map(|x| f.eval(x)).collect();
        assert_eq!(UniPoly::interpolate(&xs, &ys), f);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, 0, 1]).to_string(), "t^2 - 1");
        assert_eq!(UniPoly::new(vec![ratio(-1, 3), rat(-2)]).to_string(), "-2*t - 1/3");
    }

    fn small_poly() -> impl Strategy<Value = UniPoly> {
        prop::collection::vec(-6i64..=6, 1..6).prop_map(|c| UniPoly::from_i64(&c))
    }

    proptest! {
        #[test]
        fn resultant_matches_sylvester_determinant(f in small_poly(), g in small_poly()) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
            prop_assume!(m + n > 0);
            let syl = UniPoly::sylvester_matrix(&f, m, &g, n).det();
            prop_assert_eq!(f.resultant(&g).unwrap(), syl);
        }

        #[test]
        fn resultant_vanishes_iff_common_factor(f in small_poly(), g in small_poly()) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let common = f.gcd(&g).degree().unwrap_or(0) >= 1;
            prop_assert_eq!(f.resultant(&g).unwrap().is_zero(), common);
        }

        #[test]
        fn resultant_antisymmetry(f in small_poly(), g in small_poly()) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
            let sign = if (m * n) % 2 == 1 { rat(-1) } else { rat(1) };
            prop_assert_eq!(f.resultant(&g).unwrap(), sign * g.resultant(&f).unwrap());
        }
    }
}
