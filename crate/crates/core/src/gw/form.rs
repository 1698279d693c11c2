use std::ops::Index;

use num::Zero;

use crate::error::{Error, Result};
use crate::field::{Matrix, Rational};

/// A symmetric matrix over ℚ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymBilForm {
    m: Matrix,
}

impl SymBilForm {
    pub fn new(m: Matrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::ShapeMismatch(format!("{}×{} form", m.rows(), m.cols())));
        }
        if !m.is_symmetric() {
            return Err(Error::NonSymmetric);
        }
        Ok(Self { m })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(Matrix::from_i64(rows))
    }

    pub fn dim(&self) -> usize {
        self.m.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    pub fn det(&self) -> Rational {
        self.m.det()
    }

    /// `Pᵀ·M·P`.
    pub fn congruent(&self, p: &Matrix) -> SymBilForm {
        SymBilForm { m: &(&p.transpose() * &self.m) * p }
    }
}

impl Index<(usize, usize)> for SymBilForm {
    type Output = Rational;
    fn index(&self, ij: (usize, usize)) -> &Rational {
        &self.m[ij]
    }
}

/// Congruence diagonalization: returns `(d, P)` with `Pᵀ·M·P = diag(d)`.
///
/// Zero pivots are repaired by a swap with a later nonzero diagonal entry, or by
/// `eᵢ ← eᵢ + eⱼ`, which makes the pivot `2·Mᵢⱼ`.
pub fn diagonalize(form: &SymBilForm) -> (Vec<Rational>, Matrix) {
    let n = form.dim();
    let mut m = form.m.clone();
    let mut p = Matrix::identity(n);

    // Adds `c` times basis vector `src` to basis vector `dst`.
    let add = |m: &mut Matrix, p: &mut Matrix, dst: usize, src: usize, c: &Rational| {
        for k in 0..n {
            let v = &m[(k, src)] * c;
            m[(k, dst)] += v;
        }
        for k in 0..n {
            let v = &m[(src, k)] * c;
            m[(dst, k)] += v;
        }
        for k in 0..n {
            let v = &p[(k, src)] * c;
            p[(k, dst)] += v;
        }
    };
    let swap = |m: &mut Matrix, p: &mut Matrix, i: usize, j: usize| {
        for k in 0..n {
            let (a, b) = (m[(k, i)].clone(), m[(k, j)].clone());
            m[(k, i)] = b;
            m[(k, j)] = a;
        }
        for k in 0..n {
            let (a, b) = (m[(i, k)].clone(), m[(j, k)].clone());
            m[(i, k)] = b;
            m[(j, k)] = a;
        }
        for k in 0..n {
            let (a, b) = (p[(k, i)].clone(), p[(k, j)].clone());
            p[(k, i)] = b;
            p[(k, j)] = a;
        }
    };

    for i in 0..n {
        if m[(i, i)].is_zero() {
            if let Some(j) = (i + 1..n).find(|&j| !m[(j, j)].is_zero()) {
                swap(&mut m, &mut p, i, j);
            } else if let Some(j) = (i + 1..n).find(|&j| !m[(i, j)].is_zero()) {
                add(&mut m, &mut p, i, j, &Rational::from_integer(1.into()));
            } else {
                continue;
            }
        }
        let piv = m[(i, i)].clone();
        for j in i + 1..n {
            if !m[(i, j)].is_zero() {
                let c = -(&m[(i, j)] / &piv);
                add(&mut m, &mut p, j, i, &c);
            }
        }
    }
    ((0..n).map(|i| m[(i, i)].clone()).collect(), p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::arith::{is_square, rat};

    fn check(rows: &[&[i64]]) -> Vec<Rational> {
        let f = SymBilForm::from_i64(rows).unwrap();
        let (d, p) = diagonalize(&f);
        assert_eq!(f.congruent(&p).matrix(), &Matrix::diagonal(&d));
        assert_ne!(p.det(), rat(0));
        d
    }

    #[test]
    fn examples() {
        let d = check(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        assert_eq!(d, vec![rat(1), rat(2), rat(3)]);
        let d = check(&[&[0, 1], &[1, 0]]);
        assert!(is_square(&(-&d[0] * &d[1])));
        let d = check(&[&[1, 2], &[2, 5]]);
        assert!(d.iter().all(is_square));
        let d = check(&[&[0, 0, 1], &[0, 0, 0], &[1, 0, 0]]);
        assert_eq!(d.iter().filter(|x| x.is_zero()).count(), 1);
        assert!(SymBilForm::from_i64(&[&[0, 1], &[2, 0]]).is_err());
    }
}
