//! Number fields ℚ[z]/(m) in the power basis, polynomials over them, and
//! one-step quadratic extensions F[T]/(T² − e₁T + e₂).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::field::factor::is_irreducible;
use crate::field::{Matrix, Rational, UniPoly};

#[derive(PartialEq, Eq, Hash)]
struct FieldData {
    min_poly: UniPoly,
}

/// ℚ[z]/(m(z)) for a monic irreducible `m`. Cheap to clone.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumberField(Arc<FieldData>);

impl NumberField {
    /// Checks irreducibility; the polynomial is made monic.
    pub fn new(min_poly: &UniPoly) -> Result<Self> {
        match min_poly.degree() {
            None => return Err(Error::ZeroPolynomial),
            Some(0) => return Err(Error::NotIrreducible(min_poly.to_string())),
            _ => {}
        }
        if !is_irreducible(min_poly)? {
            return Err(Error::NotIrreducible(min_poly.fmt_in("z")));
        }
        Ok(Self::new_unchecked(min_poly.monic()))
    }

    /// Skips the irreducibility test; the caller vouches for it.
    pub(crate) fn new_unchecked(min_poly: UniPoly) -> Self {
        NumberField(Arc::new(FieldData { min_poly }))
    }

    /// ℚ itself, as ℚ[z]/(z).
    pub fn rationals() -> Self {
        Self::new_unchecked(UniPoly::x())
    }

    pub fn min_poly(&self) -> &UniPoly {
        &self.0.min_poly
    }

    pub fn degree(&self) -> usize {
        self.0.min_poly.degree().unwrap()
    }

    pub fn is_rationals(&self) -> bool {
        self.degree() == 1
    }

    pub fn zero(&self) -> NFElem {
        NFElem { field: self.clone(), poly: UniPoly::zero() }
    }

    pub fn one(&self) -> NFElem {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, c: Rational) -> NFElem {
        NFElem { field: self.clone(), poly: UniPoly::constant(c) }
    }

    pub fn from_i64(&self, c: i64) -> NFElem {
        self.from_rational(Rational::from_integer(c.into()))
    }

    /// The class of `z`.
    pub fn generator(&self) -> NFElem {
        self.from_poly(&UniPoly::x())
    }

    pub fn from_poly(&self, p: &UniPoly) -> NFElem {
        NFElem { field: self.clone(), poly: p.rem(self.min_poly()).expect("nonzero modulus") }
    }

    /// Element with the given power-basis coordinates.
    pub fn from_coords(&self, coords: Vec<Rational>) -> Result<NFElem> {
        if coords.len() != self.degree() {
            return Err(Error::ShapeMismatch(format!(
                "expected {} coordinates, got {}",
                self.degree(),
                coords.len()
            )));
        }
        Ok(self.from_poly(&UniPoly::new(coords)))
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[z]/({})", self.min_poly().fmt_in("z"))
    }
}

impl fmt::Display for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rationals() {
            f.write_str("Q")
        } else {
            write!(f, "Q[z]/({})", self.min_poly().fmt_in("z"))
        }
    }
}

/// Element of a number field, stored as a reduced polynomial in `z`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NFElem {
    field: NumberField,
    poly: UniPoly,
}

fn same(x: &NFElem, y: &NFElem) -> Result<()> {
    if x.field == y.field {
        Ok(())
    } else {
        Err(Error::MismatchedFields)
    }
}

impl NFElem {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.poly == UniPoly::one()
    }

    pub fn as_poly(&self) -> &UniPoly {
        &self.poly
    }

    pub fn coords(&self) -> Vec<Rational> {
        (0..self.field.degree()).map(|i| self.poly.coeff(i)).collect()
    }

    /// The rational value when the element lies in ℚ.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.poly.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.poly.coeff(0)),
            _ => None,
        }
    }

    pub fn try_add(&self, o: &NFElem) -> Result<NFElem> {
        same(self, o)?;
        Ok(NFElem { field: self.field.clone(), poly: &self.poly + &o.poly })
    }

    pub fn try_sub(&self, o: &NFElem) -> Result<NFElem> {
        same(self, o)?;
        Ok(NFElem { field: self.field.clone(), poly: &self.poly - &o.poly })
    }

    pub fn try_mul(&self, o: &NFElem) -> Result<NFElem> {
        same(self, o)?;
        Ok(self.field.from_poly(&(&self.poly * &o.poly)))
    }

    pub fn try_div(&self, o: &NFElem) -> Result<NFElem> {
        same(self, o)?;
        self.try_mul(&o.inv()?)
    }

    pub fn scale(&self, c: &Rational) -> NFElem {
        NFElem { field: self.field.clone(), poly: self.poly.scale(c) }
    }

    pub fn pow(&self, k: u32) -> NFElem {
        (0..k).fold(self.field.one(), |acc, _| &acc * self)
    }

    /// Inverse by the extended Euclidean algorithm against the minimal polynomial.
    pub fn inv(&self) -> Result<NFElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let m = self.field.min_poly();
        let (mut r0, mut r1) = (m.clone(), self.poly.clone());
        let (mut t0, mut t1) = (UniPoly::zero(), UniPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            r0 = std::mem::replace(&mut r1, r);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        // r0 is a nonzero constant because m is irreducible and self ≠ 0.
        if r0.degree() != Some(0) {
            return Err(Error::NotIrreducible(m.fmt_in("z")));
        }
        let c = r0.coeff(0).recip();
        Ok(self.field.from_poly(&t0.scale(&c)))
    }

    /// Matrix of multiplication by `self` on the power basis (column j is `self·zʲ`).
    pub fn mult_matrix(&self) -> Matrix {
        let d = self.field.degree();
        let mut m = Matrix::zeros(d, d);
        let mut col = self.clone();
        let z = self.field.generator();
        for j in 0..d {
            for i in 0..d {
                m[(i, j)] = col.poly.coeff(i);
            }
            col = &col * &z;
        }
        m
    }

    /// Trace of multiplication by `self` over ℚ.
    pub fn trace(&self) -> Rational {
        let m = self.mult_matrix();
        (0..m.rows()).map(|i| m[(i, i)].clone()).sum()
    }

    pub fn norm(&self) -> Rational {
        self.mult_matrix().det()
    }
}

impl fmt::Debug for NFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly.fmt_in("z"))
    }
}

impl fmt::Display for NFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.poly.fmt_in("z"))
    }
}

macro_rules! nf_binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr for &NFElem {
            type Output = NFElem;
            fn $m(self, rhs: &NFElem) -> NFElem {
                self.$try(rhs).expect("operands from different number fields")
            }
        }
        impl $tr for NFElem {
            type Output = NFElem;
            fn $m(self, rhs: NFElem) -> NFElem {
                (&self).$m(&rhs)
            }
        }
    };
}
nf_binop!(Add, add, try_add);
nf_binop!(Sub, sub, try_sub);
nf_binop!(Mul, mul, try_mul);

impl Neg for &NFElem {
    type Output = NFElem;
    fn neg(self) -> NFElem {
        NFElem { field: self.field.clone(), poly: -&self.poly }
    }
}

/// Trace of `x` over ℚ.
pub fn nf_trace(x: &NFElem) -> Rational {
    x.trace()
}

/// Dense polynomial over a number field, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NFPoly {
    field: NumberField,
    coeffs: Vec<NFElem>,
}

impl NFPoly {
    pub fn new(field: &NumberField, mut coeffs: Vec<NFElem>) -> Self {
        while coeffs.last().is_some_and(NFElem::is_zero) {
            coeffs.pop();
        }
        Self { field: field.clone(), coeffs }
    }

    pub fn from_rational(field: &NumberField, p: &UniPoly) -> Self {
        Self::new(field, p.coeffs().iter().map(|c| field.from_rational(c.clone())).collect())
    }

    pub fn zero(field: &NumberField) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[NFElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> NFElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn eval(&self, x: &NFElem) -> NFElem {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn monic(&self) -> Result<Self> {
        let Some(lc) = self.coeffs.last() else { return Ok(self.clone()) };
        let inv = lc.inv()?;
        Ok(Self::new(&self.field, self.coeffs.iter().map(|c| c * &inv).collect()))
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(&self.field, (0..n).map(|i| &self.coeff(i) + &o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(&self.field, out)
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let inv = d.coeffs[dd].inv()?;
        let mut r = self.coeffs.clone();
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let c = &r[r.len() - 1] * &inv;
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[k + j] = &r[k + j] - &(&c * dj);
            }
            r.pop();
            while r.last().is_some_and(NFElem::is_zero) {
                r.pop();
            }
        }
        Ok(Self::new(&self.field, r))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &Self) -> Result<Self> {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// `c0 + c1·T` in F[T]/(T² − e₁T + e₂). The quadratic may be reducible.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadExtElem {
    pub e1: NFElem,
    pub e2: NFElem,
    pub c0: NFElem,
    pub c1: NFElem,
}

impl QuadExtElem {
    pub fn new(e1: &NFElem, e2: &NFElem, c0: NFElem, c1: NFElem) -> Result<Self> {
        same(e1, e2)?;
        same(e1, &c0)?;
        same(e1, &c1)?;
        Ok(Self { e1: e1.clone(), e2: e2.clone(), c0, c1 })
    }

    pub fn base(&self) -> &NumberField {
        self.e1.field()
    }

    /// The embedded base-field element `c`.
    pub fn constant(&self, c: NFElem) -> Self {
        let f = self.base().clone();
        Self { e1: self.e1.clone(), e2: self.e2.clone(), c0: c, c1: f.zero() }
    }

    pub fn from_rational(&self, c: &Rational) -> Self {
        self.constant(self.base().from_rational(c.clone()))
    }

    /// The class of `T` itself.
    pub fn gen(e1: &NFElem, e2: &NFElem) -> Self {
        let f = e1.field();
        Self { e1: e1.clone(), e2: e2.clone(), c0: f.zero(), c1: f.one() }
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }

    /// Image under `T ↦ e₁ − T`.
    pub fn conj(&self) -> Self {
        Self {
            e1: self.e1.clone(),
            e2: self.e2.clone(),
            c0: &self.c0 + &(&self.c1 * &self.e1),
            c1: -&self.c1,
        }
    }

    /// `x·conj(x) = c0² + c0c1e1 + c1²e2`.
    pub fn norm(&self) -> NFElem {
        let (c0, c1) = (&self.c0, &self.c1);
        &(&(c0 * c0) + &(&(c0 * c1) * &self.e1)) + &(&(c1 * c1) * &self.e2)
    }

    /// Units are exactly the elements of nonzero norm.
    pub fn is_unit(&self) -> bool {
        !self.norm().is_zero()
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ni = n.inv()?;
        let c = self.conj();
        Ok(Self { e1: self.e1.clone(), e2: self.e2.clone(), c0: &c.c0 * &ni, c1: &c.c1 * &ni })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { e1: self.e1.clone(), e2: self.e2.clone(), c0: self.c0.scale(c), c1: self.c1.scale(c) }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(self.from_rational(&Rational::one()), |acc, _| &acc * self)
    }
}

/// Returns `c0` for an element fixed by `T ↦ e₁ − T`.
pub fn quad_reduce(x: &QuadExtElem) -> Result<NFElem> {
    if x.c1.is_zero() {
        Ok(x.c0.clone())
    } else {
        Err(Error::NotGaloisSymmetric)
    }
}

impl Add for &QuadExtElem {
    type Output = QuadExtElem;
    fn add(self, o: &QuadExtElem) -> QuadExtElem {
        QuadExtElem { e1: self.e1.clone(), e2: self.e2.clone(), c0: &self.c0 + &o.c0, c1: &self.c1 + &o.c1 }
    }
}

impl Sub for &QuadExtElem {
    type Output = QuadExtElem;
    fn sub(self, o: &QuadExtElem) -> QuadExtElem {
        QuadExtElem { e1: self.e1.clone(), e2: self.e2.clone(), c0: &self.c0 - &o.c0, c1: &self.c1 - &o.c1 }
    }
}

impl Neg for &QuadExtElem {
    type Output = QuadExtElem;
    fn neg(self) -> QuadExtElem {
        QuadExtElem { e1: self.e1.clone(), e2: self.e2.clone(), c0: -&self.c0, c1: -&self.c1 }
    }
}

impl Mul for &QuadExtElem {
    type Output = QuadExtElem;
    fn mul(self, o: &QuadExtElem) -> QuadExtElem {
        // T² = e₁T − e₂
        let hh = &self.c1 * &o.c1;
        QuadExtElem {
            e1: self.e1.clone(),
            e2: self.e2.clone(),
            c0: &(&self.c0 * &o.c0) - &(&hh * &self.e2),
            c1: &(&(&self.c0 * &o.c1) + &(&self.c1 * &o.c0)) + &(&hh * &self.e1),
        }
    }
}
