//! Algebraic-isotopy invariants of rational curves of degree 3 and 4, and the
//! correspondence between pointed rational maps of degree 3 and quartic curves.

use num::Zero;

use crate::error::{Error, Result};
use crate::field::arith::is_kth_power_class;
use crate::field::{BinaryForm, Rational, UniPoly};
use crate::gw::{bezout_matrix, gw_equal, gw_from_matrix, hankel_coefficients, hankel_matrix, GWClass, SymBilForm};
use crate::writhe::{curve_from_wedge, writhe_deg4, RationalCurve};

/// Four independent binary cubics, i.e. a twisted cubic in some coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EmbeddingDeg3 {
    curve: RationalCurve,
}

impl EmbeddingDeg3 {
    pub fn new(forms: [BinaryForm; 4]) -> Result<Self> {
        Self::from_curve(RationalCurve::new(forms)?)
    }

    pub fn from_curve(curve: RationalCurve) -> Result<Self> {
        if curve.degree() != 3 {
            return Err(Error::DegreeConstraint("expected binary cubics".into()));
        }
        if curve.coefficient_matrix().det().is_zero() {
            return Err(Error::SingularCoefficientMatrix);
        }
        Ok(Self { curve })
    }

    pub fn curve(&self) -> &RationalCurve {
        &self.curve
    }
}

/// Representative in ℚ×/ℚ×⁴: the determinant of the coefficient matrix.
pub fn isotopy_invariant_deg3(e: &EmbeddingDeg3) -> Rational {
    e.curve.coefficient_matrix().det()
}

pub fn isotopic_deg3(e1: &EmbeddingDeg3, e2: &EmbeddingDeg3) -> bool {
    is_kth_power_class(&isotopy_invariant_deg3(e1), &isotopy_invariant_deg3(e2), 4).expect("nonzero determinants")
}

pub fn embedding_writhe_deg4(c: &RationalCurve) -> Result<(GWClass, Rational)> {
    let (gw, det, _) = writhe_deg4(c)?;
    Ok((gw, det))
}

/// Same class in GW(ℚ) and determinants agreeing up to twelfth powers.
pub fn isotopic_deg4(c1: &RationalCurve, c2: &RationalCurve) -> Result<bool> {
    let (g1, d1) = embedding_writhe_deg4(c1)?;
    let (g2, d2) = embedding_writhe_deg4(c2)?;
    Ok(gw_equal(&g1, &g2) && is_kth_power_class(&d1, &d2, 12)?)
}

/// A pair `(f, g)` with `f` monic of degree 3, `deg g < 3`, and no common root.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointedRationalMap {
    f: UniPoly,
    g: UniPoly,
}

impl PointedRationalMap {
    pub fn new(f: UniPoly, g: UniPoly) -> Result<Self> {
        if f.degree() != Some(3) || !f.is_monic() {
            return Err(Error::DegreeConstraint("f must be monic of degree 3".into()));
        }
        if g.degree().is_some_and(|d| d >= 3) {
            return Err(Error::DegreeConstraint("g must have degree < 3".into()));
        }
        if g.is_zero() || f.resultant(&g)?.is_zero() {
            return Err(Error::NotCoprime);
        }
        Ok(Self { f, g })
    }

    pub fn f(&self) -> &UniPoly {
        &self.f
    }

    pub fn g(&self) -> &UniPoly {
        &self.g
    }

    pub fn hankel(&self) -> SymBilForm {
        hankel_matrix(&self.f, &self.g, 3).expect("validated pair")
    }

    pub fn bezout(&self) -> SymBilForm {
        bezout_matrix(&self.f, &self.g, 3).expect("validated pair")
    }
}

/// Wedge coordinates `x_i = h_i`, the coefficients of `g/f = Σ h_k t^{−k−1}`,
/// so that the Hankel pattern of `x` is `H₃(f, g)`.
pub fn cazanave_phi(m: &PointedRationalMap) -> [Rational; 5] {
    let h = hankel_coefficients(&m.f, &m.g, 5);
    [0, 1, 2, 3, 4].map(|i| h[i].clone())
}

/// A quartic curve whose wedge coordinates are `cazanave_phi(m)`.
pub fn cazanave_curve(m: &PointedRationalMap) -> Result<RationalCurve> {
    curve_from_wedge(&cazanave_phi(m))
}

/// The class and determinant of the Bézout form `B₃(f, g)`.
pub fn cazanave_class(m: &PointedRationalMap) -> (GWClass, Rational) {
    let b = m.bezout();
    let det = b.det();
    (gw_from_matrix(&b).expect("coprime pair gives a nondegenerate form"), det)
}
