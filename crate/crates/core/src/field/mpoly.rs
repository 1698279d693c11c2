//! Sparse multivariate polynomials over ℚ.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use super::arith::Rational;
use super::poly::UniPoly;

/// Polynomial in a fixed number of variables; exponent vectors map to nonzero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::term(e, Rational::one())
    }

    pub fn term(exps: Vec<u32>, c: Rational) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    /// True when every term has total degree `d` (the zero polynomial qualifies).
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(self.nvars, Rational::one()), |acc, _| &acc * self)
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(point).fold(c.clone(), |acc, (&k, x)| acc * num::pow::pow(x.clone(), k as usize))
            })
            .sum()
    }

    /// Substitutes values for every variable except `keep`, giving a univariate polynomial.
    pub fn to_univariate(&self, keep: usize, point: &[Rational]) -> UniPoly {
        let mut coeffs: Vec<Rational> = Vec::new();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (i, (&k, x)) in e.iter().zip(point).enumerate() {
                if i != keep {
                    v *= num::pow::pow(x.clone(), k as usize);
                }
            }
            let d = e[keep] as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, Rational::zero());
            }
            coeffs[d] += v;
        }
        UniPoly::new(coeffs)
    }

    /// Exact quotient by `x_j − x_i`; `None` if the division leaves a remainder.
    pub fn div_difference(&self, i: usize, j: usize) -> Option<MPoly> {
        // Treat as a polynomial in x_j over the remaining variables and use Horner.
        let n = self.nvars;
        let dj = match self.degree_in(j) {
            None => return Some(self.clone()),
            Some(d) => d as usize,
        };
        let mut slices: Vec<MPoly> = vec![MPoly::zero(n); dj + 1];
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2[j] as usize;
            e2[j] = 0;
            slices[k].add_term(e2, c.clone());
        }
        let xi = MPoly::var(n, i);
        let mut q: Vec<MPoly> = vec![MPoly::zero(n); dj];
        let mut carry = MPoly::zero(n);
        for k in (0..=dj).rev() {
            let cur = &slices[k] + &carry;
            if k == 0 {
                if !cur.is_zero() {
                    return None;
                }
                break;
            }
            carry = &cur * &xi;
            q[k - 1] = cur;
        }
        let mut out = MPoly::zero(n);
        for (k, part) in q.into_iter().enumerate() {
            for (e, c) in part.terms {
                let mut e2 = e;
                e2[j] += k as u32;
                out.add_term(e2, c);
            }
        }
        Some(out)
    }

    /// Rewrites a polynomial symmetric in `x₀, x₁` (a two-variable polynomial)
    /// in terms of `σ₁ = x₀ + x₁` and `σ₂ = x₀·x₁`. The result uses variables `(σ₁, σ₂)`.
    pub fn to_elementary_symmetric(&self) -> Option<MPoly> {
        assert_eq!(self.nvars, 2);
        let s1 = &MPoly::var(2, 0) + &MPoly::var(2, 1);
        let s2 = &MPoly::var(2, 0) * &MPoly::var(2, 1);
        let mut rest = self.clone();
        let mut out = MPoly::zero(2);
        while let Some((e, c)) = rest.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let (a, b) = (e[0], e[1]);
            if a < b {
                return None;
            }
            let sub = &s1.pow(a - b) * &s2.pow(b);
            rest = &rest - &sub.scale(&c);
            out.add_term(vec![a - b, b], c);
        }
        Some(out)
    }

    /// Homogenizes with a new variable placed first, to total degree `d`.
    pub fn homogenize(&self, d: u32) -> MPoly {
        let mut out = MPoly::zero(self.nvars + 1);
        for (e, c) in &self.terms {
            let s: u32 = e.iter().sum();
            assert!(s <= d, "term exceeds homogenization degree");
            let mut e2 = vec![d - s];
            e2.extend_from_slice(e);
            out.add_term(e2, c.clone());
        }
        out
    }

    pub fn fmt_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { names[i].to_string() } else { format!("{}^{k}", names[i]) })
                .collect();
            if mono.is_empty() {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&mono.join("*"));
            } else {
                out.push_str(&format!("{a}*{}", mono.join("*")));
            }
        }
        out
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        write!(f, "MPoly({})", self.fmt_with(&refs))
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self + &(-rhs)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::arith::rat;
    use proptest::prelude::*;

    fn x() -> MPoly {
        MPoly::var(2, 0)
    }
    fn y() -> MPoly {
        MPoly::var(2, 1)
    }

    #[test]
    fn divide_by_difference() {
        // (y³ − x³)/(y − x) = x² + xy + y²
        let f = &y().pow(3) - &x().pow(3);
        let q = f.div_difference(0, 1).unwrap();
        let expect = &(&x().pow(2) + &(&x() * &y())) + &y().pow(2);
        assert_eq!(q, expect);
        assert!(x().div_difference(0, 1).is_none());
    }

    #[test]
    fn elementary_symmetric_rewrite() {
        // x² + xy + y² = σ₁² − σ₂
        let f = &(&x().pow(2) + &(&x() * &y())) + &y().pow(2);
        let g = f.to_elementary_symmetric().unwrap();
        let expect = &x().pow(2) - &y();
        assert_eq!(g, expect);
        assert!(x().to_elementary_symmetric().is_none());
    }

    proptest! {
        #[test]
        fn symmetric_rewrite_round_trips(c in prop::collection::vec(-5i64..=5, 6)) {
            // Build a symmetric polynomial from a random polynomial in σ₁, σ₂.
            let s1 = &x() + &y();
            let s2 = &x() * &y();
            let mut g = MPoly::zero(2);
            let mut f = MPoly::zero(2);
            let exps = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (3, 0)];
            for (k, &(a, b)) in exps.iter().enumerate() {
                g.add_term(vec![a, b], rat(c[k]));
                f = &f + &(&s1.pow(a) * &s2.pow(b)).scale(&rat(c[k]));
            }
            prop_assert_eq!(f.to_elementary_symmetric().unwrap(), g.clone());
            let pt = [rat(3), rat(-2)];
            let spt = [rat(1), rat(-6)];
            prop_assert_eq!(f.eval(&pt), g.eval(&spt));
        }
    }
}
