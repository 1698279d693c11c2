use num::Zero;

use crate::error::{Error, Result};
use crate::field::{BinaryForm, Matrix, Rational, UniPoly};
use crate::gw::{gw_from_matrix, GWClass, SymBilForm};

/// A parametrized curve `(r : s) ↦ (p₀ : p₁ : p₂ : p₃)` by four binary forms of equal degree.
///
/// Construction only checks shapes; [`RationalCurve::validate`] checks that
/// the forms are independent and base-point free.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalCurve {
    forms: [BinaryForm; 4],
}

impl RationalCurve {
    pub fn new(forms: [BinaryForm; 4]) -> Result<Self> {
        let n = forms[0].degree();
        if n == 0 {
            return Err(Error::DegreeConstraint("curve degree must be positive".into()));
        }
        if forms.iter().any(|f| f.degree() != n) {
            return Err(Error::DegreeConstraint("all four forms must have the same degree".into()));
        }
        Ok(Self { forms })
    }

    pub fn from_i64(rows: [&[i64]; 4]) -> Result<Self> {
        Self::new(rows.map(BinaryForm::from_i64))
    }

    /// The rational normal-style quartic `(r⁴, r³s, rs³, s⁴)`.
    pub fn standard_quartic() -> Self {
        Self::from_i64([&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0], &[0, 0, 0, 1, 0], &[0, 0, 0, 0, 1]]).unwrap()
    }

    /// The twisted cubic `(r³, r²s, rs², s³)`.
    pub fn twisted_cubic() -> Self {
        Self::from_i64([&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.forms[0].degree()
    }

    pub fn forms(&self) -> &[BinaryForm; 4] {
        &self.forms
    }

    /// `4 × (n+1)` matrix; row `j` holds the coefficients of `p_j` on `rⁿ, rⁿ⁻¹s, …, sⁿ`.
    pub fn coefficient_matrix(&self) -> Matrix {
        Matrix::from_rows(self.forms.iter().map(|f| f.coeffs().to_vec()).collect())
    }

    /// Row `j` of the image is `Σ_k a[j][k]·p_k`.
    pub fn compose(&self, a: &Matrix) -> Result<Self> {
        if a.rows() != 4 || a.cols() != 4 {
            return Err(Error::ShapeMismatch("coordinate change must be 4×4".into()));
        }
        let m = a * &self.coefficient_matrix();
        let n = self.degree();
        let forms: Vec<BinaryForm> =
            (0..4).map(|j| BinaryForm::new(n, m.row(j).to_vec())).collect::<Result<_>>()?;
        Self::new(forms.try_into().expect("four rows"))
    }

    pub fn eval(&self, r: &Rational, s: &Rational) -> [Rational; 4] {
        [0, 1, 2, 3].map(|j| self.forms[j].eval(r, s))
    }

    /// The affine chart `r = 1`: the four polynomials `p_j(1, t)`.
    pub fn affine(&self) -> [UniPoly; 4] {
        [0, 1, 2, 3].map(|j| self.forms[j].dehomogenize())
    }

    /// Independence of the forms and absence of base points.
    pub fn validate(&self) -> Result<()> {
        if self.coefficient_matrix().rank() < 4 {
            return Err(Error::NotEmbedding("the four forms are linearly dependent".into()));
        }
        let n = self.degree();
        if self.forms.iter().all(|f| f.coeffs()[n].is_zero()) {
            return Err(Error::NotEmbedding("common zero at (0:1)".into()));
        }
        let g = self.affine().iter().fold(UniPoly::zero(), |acc, p| acc.gcd(p));
        if g.degree().unwrap_or(0) > 0 {
            return Err(Error::NotEmbedding(format!("common factor {g}")));
        }
        Ok(())
    }
}

/// `x_i = det[p₀; p₁; p₂; p₃; r^{4−i}sⁱ]` on the monomial basis `r⁴, …, s⁴`.
pub fn wedge_coords(c: &RationalCurve) -> Result<[Rational; 5]> {
    if c.degree() != 4 {
        return Err(Error::DegreeConstraint("wedge coordinates need a quartic".into()));
    }
    let base = c.coefficient_matrix().to_rows();
    Ok([0, 1, 2, 3, 4].map(|i| {
        let mut rows = base.clone();
        let mut e = vec![Rational::zero(); 5];
        e[i] = Rational::from_integer(1.into());
        rows.push(e);
        Matrix::from_rows(rows).det()
    }))
}

/// The Hankel matrix `Λ = (x_{i+j})` of the wedge coordinates.
pub fn hankel_lambda_from_coords(x: &[Rational; 5]) -> SymBilForm {
    let rows = (0..3).map(|i| (0..3).map(|j| x[i + j].clone()).collect()).collect();
    SymBilForm::new(Matrix::from_rows(rows)).expect("Hankel matrices are symmetric")
}

pub fn hankel_lambda(c: &RationalCurve) -> Result<SymBilForm> {
    Ok(hankel_lambda_from_coords(&wedge_coords(c)?))
}

/// Global writhe of a quartic: the class of `Λ` and its determinant.
pub fn writhe_deg4(c: &RationalCurve) -> Result<(GWClass, Rational, SymBilForm)> {
    let l = hankel_lambda(c)?;
    let det = l.det();
    if det.is_zero() {
        return Err(Error::NotEmbedding("Λ is singular".into()));
    }
    Ok((gw_from_matrix(&l)?, det, l))
}

/// A curve with prescribed wedge coordinates: the four forms span the kernel of
/// `f ↦ Σ xᵢ·fᵢ`, with `p₀` rescaled so the coordinates match exactly.
pub fn curve_from_wedge(x: &[Rational; 5]) -> Result<RationalCurve> {
    if x.iter().all(Zero::is_zero) {
        return Err(Error::ZeroInput);
    }
    // f ∧ e_i equals the coefficient-wise functional; recover it from the forms' kernel.
    let functional = Matrix::from_rows(vec![x.to_vec()]);
    let ker = functional.kernel();
    debug_assert_eq!(ker.len(), 4);
    let mut forms: Vec<BinaryForm> =
        ker.into_iter().map(|v| BinaryForm::new(4, v)).collect::<Result<_>>()?;
    let trial = RationalCurve::new(forms.clone().try_into().unwrap())?;
    let y = wedge_coords(&trial)?;
    // y is proportional to x; find the factor on a nonzero coordinate.
    let k = (0..5).find(|&i| !x[i].is_zero()).unwrap();
    let scale = &x[k] / &y[k];
    forms[0] = forms[0].scale(&scale);
    RationalCurve::new(forms.try_into().unwrap())
}
