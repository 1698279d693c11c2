use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use super::form::{diagonalize, SymBilForm};
use super::hilbert::{hilbert_on_classes, Place};
use crate::error::{Error, Result};
use crate::field::arith::{prime_divisors, square_class};
use crate::field::{Matrix, Rational};
use crate::numfield::{NFElem, NumberField};

/// Orthogonal sum `⟨a₁⟩ + ⋯ + ⟨a_r⟩` of rank-one forms. Equality in the
/// Grothendieck–Witt group is [`gw_equal`], not multiset equality.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GWClass {
    diag: Vec<Rational>,
}

/// Complete isometry invariants of a form over ℚ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GWInvariants {
    pub rank: usize,
    pub signature: i64,
    /// Squarefree representative of the determinant's square class (1 for rank 0).
    pub disc: BigInt,
    /// `∏_{i<j} (aᵢ, aⱼ)_v` on the relevant places; +1 everywhere else.
    pub hasse: BTreeMap<Place, i8>,
}

impl GWClass {
    pub fn new(diag: Vec<Rational>) -> Result<Self> {
        if diag.iter().any(Zero::is_zero) {
            return Err(Error::ZeroInput);
        }
        Ok(Self { diag })
    }

    pub fn from_i64(diag: &[i64]) -> Self {
        Self::new(diag.iter().map(|&a| Rational::from_integer(a.into())).collect())
            .expect("nonzero entries")
    }

    /// `⟨a⟩`.
    pub fn rank_one(a: Rational) -> Result<Self> {
        Self::new(vec![a])
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn diag(&self) -> &[Rational] {
        &self.diag
    }

    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    /// Orthogonal sum.
    pub fn sum(&self, other: &GWClass) -> GWClass {
        let mut diag = self.diag.clone();
        diag.extend(other.diag.iter().cloned());
        GWClass { diag }
    }

    /// `k·self` for `k ≥ 0`.
    pub fn times(&self, k: usize) -> GWClass {
        (0..k).fold(GWClass::zero(), |acc, _| acc.sum(self))
    }

    pub fn signature(&self) -> i64 {
        self.diag.iter().map(|a| if a.is_positive() { 1 } else { -1 }).sum()
    }

    pub fn disc(&self) -> BigInt {
        if self.diag.is_empty() {
            return BigInt::one();
        }
        let prod: Rational = self.diag.iter().product();
        square_class(&prod)
    }

    /// Places where the Hasse invariant can differ from +1.
    pub fn places(&self) -> BTreeSet<Place> {
        let mut s = BTreeSet::from([Place::prime(2), Place::Inf]);
        for a in &self.diag {
            for p in prime_divisors(&square_class(a)) {
                s.insert(Place::Prime(p));
            }
        }
        s
    }

    fn classes(&self) -> Vec<BigInt> {
        self.diag.iter().map(square_class).collect()
    }

    pub fn hasse_at(&self, v: &Place) -> i8 {
        hasse_on_classes(&self.classes(), v)
    }

    pub fn invariants(&self) -> GWInvariants {
        let cls = self.classes();
        GWInvariants {
            rank: self.rank(),
            signature: self.signature(),
            disc: self.disc(),
            hasse: self.places().into_iter().map(|v| (v.clone(), hasse_on_classes(&cls, &v))).collect(),
        }
    }

    /// Diagonal matrix of the entries.
    pub fn matrix(&self) -> Matrix {
        Matrix::diagonal(&self.diag)
    }
}

impl fmt::Display for GWClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.diag.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.diag.iter().map(|a| format!("<{a}>")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Isometry test by Hasse–Minkowski: rank, signature, discriminant and every local Hasse invariant.
pub fn gw_equal(a: &GWClass, b: &GWClass) -> bool {
    if a.rank() != b.rank() || a.signature() != b.signature() || a.disc() != b.disc() {
        return false;
    }
    let places: BTreeSet<Place> = a.places().union(&b.places()).cloned().collect();
    let (ca, cb) = (a.classes(), b.classes());
    places.iter().all(|v| hasse_on_classes(&ca, v) == hasse_on_classes(&cb, v))
}

fn hasse_on_classes(cls: &[BigInt], v: &Place) -> i8 {
    let mut h = 1;
    for i in 0..cls.len() {
        for j in i + 1..cls.len() {
            h *= hilbert_on_classes(&cls[i], &cls[j], v);
        }
    }
    h
}

/// The class of a nondegenerate symmetric matrix.
pub fn gw_from_matrix(m: &SymBilForm) -> Result<GWClass> {
    if m.det().is_zero() {
        return Err(Error::SingularForm);
    }
    let (d, _) = diagonalize(m);
    GWClass::new(d)
}

/// The scaled trace form `(x, y) ↦ Tr_{F/ℚ}(a·x·y)` on the power basis.
pub fn trace_form(field: &NumberField, a: &NFElem) -> Result<GWClass> {
    if a.field() != field {
        return Err(Error::MismatchedFields);
    }
    if a.is_zero() {
        return Err(Error::ZeroInput);
    }
    let d = field.degree();
    let z = field.generator();
    let traces: Vec<Rational> = (0..2 * d - 1).map(|k| (a * &z.pow(k as u32)).trace()).collect();
    let rows = (0..d).map(|i| (0..d).map(|j| traces[i + j].clone()).collect()).collect();
    gw_from_matrix(&SymBilForm::new(Matrix::from_rows(rows))?)
}
