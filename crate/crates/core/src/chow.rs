//! Determinantal Chow-form matrices: products of linear resolution matrices
//! in the tensor algebra, Koszul evaluations, and Plücker evaluation.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{Matrix, Rational};

/// `Σ_l x_l · C_l` with constant `rows × cols` matrices `C_l`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinFormMatrix {
    rows: usize,
    cols: usize,
    coeff: Vec<Matrix>,
}

impl LinFormMatrix {
    pub fn new(rows: usize, cols: usize, coeff: Vec<Matrix>) -> Result<Self> {
        if coeff.is_empty() {
            return Err(Error::ShapeMismatch("no variables".into()));
        }
        if let Some(bad) = coeff.iter().find(|m| m.rows() != rows || m.cols() != cols) {
            return Err(Error::ShapeMismatch(format!(
                "coefficient matrix is {}×{}, expected {rows}×{cols}",
                bad.rows(),
                bad.cols()
            )));
        }
        Ok(Self { rows, cols, coeff })
    }

    /// Builds from entries given as coefficient vectors over the variables.
    pub fn from_entries(nvars: usize, entries: &[Vec<Vec<i64>>]) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        let mut coeff = vec![Matrix::zeros(rows, cols); nvars];
        for (i, row) in entries.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::ShapeMismatch("ragged rows".into()));
            }
            for (j, form) in row.iter().enumerate() {
                if form.len() != nvars {
                    return Err(Error::ShapeMismatch("linear form has wrong length".into()));
                }
                for (l, &c) in form.iter().enumerate() {
                    coeff[l][(i, j)] = Rational::from_integer(c.into());
                }
            }
        }
        Self::new(rows, cols, coeff)
    }

    /// `x·I_d − B` style helper: the scalar matrix `x_var · I_d`.
    pub fn scalar(d: usize, nvars: usize, var: usize) -> Self {
        let mut coeff = vec![Matrix::zeros(d, d); nvars];
        coeff[var] = Matrix::identity(d);
        Self { rows: d, cols: d, coeff }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.coeff.len()
    }

    pub fn coeff(&self, l: usize) -> &Matrix {
        &self.coeff[l]
    }

    /// The constant matrix obtained by evaluating every linear form at `v`.
    pub fn eval(&self, v: &[Rational]) -> Result<Matrix> {
        if v.len() != self.nvars() {
            return Err(Error::ShapeMismatch(format!("vector of length {} for {} variables", v.len(), self.nvars())));
        }
        let mut out = Matrix::zeros(self.rows, self.cols);
        for (c, m) in v.iter().zip(&self.coeff) {
            if !c.is_zero() {
                out = &out + &m.scale(c);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols, self.nvars()) != (other.rows, other.cols, other.nvars()) {
            return Err(Error::ShapeMismatch("difference of differently shaped matrices".into()));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            coeff: self.coeff.iter().zip(&other.coeff).map(|(a, b)| a - b).collect(),
        })
    }

    /// `P · self · Q` with constant matrices.
    pub fn conjugate(&self, p: &Matrix, q: &Matrix) -> Self {
        Self {
            rows: p.rows(),
            cols: q.cols(),
            coeff: self.coeff.iter().map(|c| &(p * c) * q).collect(),
        }
    }
}

/// Strictly increasing `c`-tuples from `0..n`, in lexicographic order.
pub fn wedge_indices(n: usize, c: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, c: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == c {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, c, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, c, 0, &mut Vec::new(), &mut out);
    out
}

/// A `d × d` matrix whose entries are linear forms on `∧^c K^{n+1}`, stored
/// as one constant matrix per wedge-basis element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlueckerLinearMatrix {
    dim: usize,
    c: usize,
    nvars: usize,
    coeff: BTreeMap<Vec<usize>, Matrix>,
}

impl PlueckerLinearMatrix {
    /// Missing wedge indices are treated as zero coefficients.
    pub fn new(dim: usize, c: usize, nvars: usize, coeff: BTreeMap<Vec<usize>, Matrix>) -> Result<Self> {
        let valid = wedge_indices(nvars, c);
        for (k, m) in &coeff {
            if !valid.contains(k) {
                return Err(Error::ShapeMismatch(format!("{k:?} is not an increasing {c}-tuple below {nvars}")));
            }
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::ShapeMismatch(format!("coefficient of {k:?} is not {dim}×{dim}")));
            }
        }
        let full = valid
            .into_iter()
            .map(|k| {
                let m = coeff.get(&k).cloned().unwrap_or_else(|| Matrix::zeros(dim, dim));
                (k, m)
            })
            .collect();
        Ok(Self { dim, c, nvars, coeff: full })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn codim(&self) -> usize {
        self.c
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Coefficient matrix of the wedge-basis element `e_{j₁} ∧ ⋯ ∧ e_{j_c}`.
    pub fn coeff(&self, index: &[usize]) -> Option<&Matrix> {
        self.coeff.get(index)
    }

    /// Entry `(i, j)` as a list of `(wedge index, coefficient)` with nonzero coefficients.
    pub fn entry(&self, i: usize, j: usize) -> Vec<(Vec<usize>, Rational)> {
        self.coeff
            .iter()
            .filter(|(_, m)| !m[(i, j)].is_zero())
            .map(|(k, m)| (k.clone(), m[(i, j)].clone()))
            .collect()
    }
}

fn permutations(c: usize) -> Vec<(Vec<usize>, i8)> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; c], &mut out);
    out.into_iter()
        .map(|p| {
            let inv = (0..c).flat_map(|i| (i + 1..c).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let s = if inv % 2 == 0 { 1 } else { -1 };
            (p, s)
        })
        .collect()
}

/// The product `A₁⋯A_c` over the tensor algebra, read on the exterior power.
pub fn gamma_from_resolution(mats: &[LinFormMatrix]) -> Result<PlueckerLinearMatrix> {
    let first = mats.first().ok_or_else(|| Error::ShapeMismatch("empty resolution".into()))?;
    let nvars = first.nvars();
    for w in mats.windows(2) {
        if w[0].cols != w[1].rows {
            return Err(Error::ShapeMismatch(format!(
                "{}×{} followed by {}×{}",
                w[0].rows, w[0].cols, w[1].rows, w[1].cols
            )));
        }
    }
    if mats.iter().any(|m| m.nvars() != nvars) {
        return Err(Error::ShapeMismatch("matrices over different variable sets".into()));
    }
    let d = first.rows;
    if mats.last().unwrap().cols != d {
        return Err(Error::ShapeMismatch("product is not square".into()));
    }
    // Tensor coefficients indexed by multi-indices (i₁, …, i_k).
    let mut tensor: BTreeMap<Vec<usize>, Matrix> =
        (0..nvars).map(|l| (vec![l], first.coeff[l].clone())).collect();
    for a in &mats[1..] {
        let mut next = BTreeMap::new();
        for (k, t) in &tensor {
            for l in 0..nvars {
                let mut key = k.clone();
                key.push(l);
                next.insert(key, t * &a.coeff[l]);
            }
        }
        tensor = next;
    }
    let c = mats.len();
    for (k, t) in &tensor {
        let repeated = (0..c).any(|i| (i + 1..c).any(|j| k[i] == k[j]));
        if repeated {
            if !t.is_zero() {
                return Err(Error::NotAlternating(format!("nonzero coefficient on repeated index {k:?}")));
            }
            continue;
        }
        for i in 0..c.saturating_sub(1) {
            let mut sw = k.clone();
            sw.swap(i, i + 1);
            if &(&tensor[&sw] + t) != &Matrix::zeros(d, d) {
                return Err(Error::NotAlternating(format!("coefficients of {k:?} and {sw:?} do not cancel")));
            }
        }
    }
    let coeff = wedge_indices(nvars, c).into_iter().map(|k| {
        let m = tensor[&k].clone();
        (k, m)
    });
    PlueckerLinearMatrix::new(d, c, nvars, coeff.collect())
}

/// `Σ_τ sgn(τ) A_{τ(1)}(v₁)⋯A_{τ(c)}(v_c)` for square, pairwise commuting `A_i`.
pub fn koszul_gamma(mats: &[LinFormMatrix], vs: &[Vec<Rational>]) -> Result<Matrix> {
    let c = mats.len();
    if c == 0 || vs.len() != c {
        return Err(Error::ShapeMismatch(format!("{c} matrices but {} vectors", vs.len())));
    }
    let d = mats[0].rows;
    if mats.iter().any(|m| m.rows != d || m.cols != d) {
        return Err(Error::ShapeMismatch("Koszul matrices must be square of equal size".into()));
    }
    // evals[i][j] = A_i(v_j)
    let evals: Vec<Vec<Matrix>> =
        mats.iter().map(|a| vs.iter().map(|v| a.eval(v)).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
    for i in 0..c {
        for j in i + 1..c {
            for v in 0..c {
                for w in v..c {
                    let lhs = &(&evals[i][v] * &evals[j][w]) + &(&evals[i][w] * &evals[j][v]);
                    let rhs = &(&evals[j][v] * &evals[i][w]) + &(&evals[j][w] * &evals[i][v]);
                    if lhs != rhs {
                        return Err(Error::NonCommuting(format!("A_{i} and A_{j} on vectors {v}, {w}")));
                    }
                }
            }
        }
    }
    let mut out = Matrix::zeros(d, d);
    for (perm, sign) in permutations(c) {
        let prod = (0..c).fold(Matrix::identity(d), |acc, j| &acc * &evals[perm[j]][j]);
        out = if sign > 0 { &out + &prod } else { &out - &prod };
    }
    Ok(out)
}

/// Maximal minors of the `c × (n+1)` matrix with the given rows, in the order of [`wedge_indices`].
pub fn plucker_coords(points: &[Vec<Rational>]) -> Vec<Rational> {
    let m = Matrix::from_rows(points.to_vec());
    let rows: Vec<usize> = (0..m.rows()).collect();
    wedge_indices(m.cols(), m.rows()).iter().map(|cols| m.minor(&rows, cols)).collect()
}

/// `Σ_J w_J · coeff(J)`.
pub fn plucker_eval(l: &PlueckerLinearMatrix, w: &[Rational]) -> Result<Matrix> {
    if w.len() != l.coeff.len() {
        return Err(Error::ShapeMismatch(format!("{} Plücker coordinates, expected {}", w.len(), l.coeff.len())));
    }
    let mut out = Matrix::zeros(l.dim, l.dim);
    for (x, m) in w.iter().zip(l.coeff.values()) {
        if !x.is_zero() {
            out = &out + &m.scale(x);
        }
    }
    Ok(out)
}

/// Finds diagonal sign matrices with `D₁·a·D₂ = b` (sign changes of the bases of
/// the first and last module), trying `D₁ = D₂ = I` first.
pub fn sign_equivalence(a: &PlueckerLinearMatrix, b: &PlueckerLinearMatrix) -> Option<(Vec<i8>, Vec<i8>)> {
    if (a.dim, a.c, a.nvars) != (b.dim, b.c, b.nvars) || a.dim > 12 {
        return None;
    }
    let d = a.dim;
    let signs = |mask: u32| -> Vec<i8> { (0..d).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect() };
    for m1 in 0..(1u32 << d) {
        let s1 = signs(m1);
        'next: for m2 in 0..(1u32 << d) {
            let s2 = signs(m2);
            for (k, ma) in &a.coeff {
                let mb = &b.coeff[k];
                for i in 0..d {
                    for j in 0..d {
                        let v = &ma[(i, j)];
                        let w = if s1[i] * s2[j] > 0 { v.clone() } else { -v.clone() };
                        if w != mb[(i, j)] {
                            continue 'next;
                        }
                    }
                }
            }
            return Some((s1, s2));
        }
    }
    None
}

/// Resolution matrices of the twisted cubic `(s³ : s²t : st² : t³)` pushed forward from O(2).
pub fn twisted_cubic_resolution() -> (LinFormMatrix, LinFormMatrix) {
    let x = |i: usize, s: i64| {
        let mut v = vec![0; 4];
        v[i] = s;
        v
    };
    let z = vec![0; 4];
    let a1 = vec![
        vec![x(1, -1), x(2, -1), x(2, -1), x(3, -1), x(3, -1), z.clone()],
        vec![x(0, 1), z.clone(), x(1, 1), z.clone(), x(2, 1), x(3, -1)],
        vec![z.clone(), x(0, 1), z.clone(), x(1, 1), z.clone(), x(2, 1)],
    ];
    let a2t = vec![
        vec![x(2, -1), x(1, 1), z.clone(), x(0, -1), x(0, 1), z.clone()],
        vec![x(3, -1), x(2, 1), x(2, -1), z.clone(), x(1, 1), x(0, -1)],
        vec![z.clone(), z.clone(), x(3, 1), x(2, -1), z.clone(), x(1, 1)],
    ];
    let a2: Vec<Vec<Vec<i64>>> = (0..6).map(|j| (0..3).map(|i| a2t[i][j].clone()).collect()).collect();
    (
        LinFormMatrix::from_entries(4, &a1).expect("well-formed"),
        LinFormMatrix::from_entries(4, &a2).expect("well-formed"),
    )
}

fn pl(dim: usize, entries: &[(usize, usize, &[((usize, usize), i64)])]) -> PlueckerLinearMatrix {
    let mut coeff: BTreeMap<Vec<usize>, Matrix> = BTreeMap::new();
    for &(i, j, terms) in entries {
        for &((a, b), c) in terms {
            let m = coeff.entry(vec![a, b]).or_insert_with(|| Matrix::zeros(dim, dim));
            m[(i, j)] += Rational::from_integer(c.into());
        }
    }
    PlueckerLinearMatrix::new(dim, 2, 4, coeff).expect("well-formed")
}

/// The Chow matrix of the twisted cubic in Plücker coordinates `x_ij`.
pub fn twisted_cubic_gamma() -> PlueckerLinearMatrix {
    pl(
        3,
        &[
            (0, 0, &[((1, 2), -1)]),
            (0, 1, &[((1, 3), -1)]),
            (0, 2, &[((2, 3), 1)]),
            (1, 0, &[((0, 2), 1)]),
            (1, 1, &[((1, 2), 1), ((0, 3), 1)]),
            (1, 2, &[((1, 3), -1)]),
            (2, 0, &[((0, 1), -1)]),
            (2, 1, &[((0, 2), -1)]),
            (2, 2, &[((1, 2), 1)]),
        ],
    )
}

/// Symmetric Λ of the elliptic curve `y² = x³ − x` embedded by `(1, x, y, x²)`
/// twisted by the 2-torsion bundle of `P₋₁ − P₀`.
pub fn elliptic_lambda() -> PlueckerLinearMatrix {
    let e00: &[((usize, usize), i64)] = &[((2, 3), -1), ((1, 2), 1), ((0, 2), 1)];
    let e01: &[((usize, usize), i64)] = &[((2, 3), 1), ((1, 2), -1), ((0, 2), -1)];
    let e02: &[((usize, usize), i64)] = &[((1, 3), 1), ((0, 3), 1)];
    let e03: &[((usize, usize), i64)] = &[((0, 3), 1), ((0, 1), 1)];
    let e11: &[((usize, usize), i64)] = &[((1, 2), 1), ((0, 2), 1)];
    let e12: &[((usize, usize), i64)] = &[((0, 3), -1)];
    let e13: &[((usize, usize), i64)] = &[((0, 1), -1)];
    let e22: &[((usize, usize), i64)] = &[((2, 3), 1), ((1, 2), 1)];
    let e23: &[((usize, usize), i64)] = &[((0, 2), 1)];
    let e33: &[((usize, usize), i64)] = &[((0, 2), 1)];
    pl(
        4,
        &[
            (0, 0, e00),
            (0, 1, e01),
            (1, 0, e01),
            (0, 2, e02),
            (2, 0, e02),
            (0, 3, e03),
            (3, 0, e03),
            (1, 1, e11),
            (1, 2, e12),
            (2, 1, e12),
            (1, 3, e13),
            (3, 1, e13),
            (2, 2, e22),
            (2, 3, e23),
            (3, 2, e23),
            (3, 3, e33),
        ],
    )
}

/// Commuting matrices `A₁ = x₁·I − B₁`, `A₂ = x₂·I − B₂` of multiplication by
/// `x₁, x₂` on `H⁰(O(2))` of the twisted cubic, as a free `K[x₀, x₃]`-module
/// with basis `(s², st, t²)`.
pub fn twisted_cubic_koszul() -> Vec<LinFormMatrix> {
    let x0 = vec![1, 0, 0, 0];
    let x3 = vec![0, 0, 0, 1];
    let z = vec![0; 4];
    // Column j is the image of basis vector j.
    let b1 = vec![
        vec![z.clone(), z.clone(), x3.clone()],
        vec![x0.clone(), z.clone(), z.clone()],
        vec![z.clone(), x0.clone(), z.clone()],
    ];
    let b2 = vec![
        vec![z.clone(), x3.clone(), z.clone()],
        vec![z.clone(), z.clone(), x3.clone()],
        vec![x0.clone(), z.clone(), z.clone()],
    ];
    let a = |var: usize, b: &[Vec<Vec<i64>>]| {
        LinFormMatrix::scalar(3, 4, var).sub(&LinFormMatrix::from_entries(4, b).expect("well-formed")).expect("same shape")
    };
    vec![a(1, &b1), a(2, &b2)]
}

/// Unit coordinate vector.
pub fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}
