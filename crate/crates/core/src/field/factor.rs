//! Factorization in ℚ[t]: squarefree decomposition followed by Zassenhaus
//! (modular factorization, Hensel lifting, subset recombination).

use num::bigint::BigInt;
use num::{Integer, One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::arith::Rational;
use super::modp::{distinct_degree, equal_degree, ModPoly};
use super::poly::UniPoly;
use crate::error::{Error, Result};

/// Largest degree accepted by [`factor_rational`].
pub const FACTOR_DEGREE_CAP: usize = 64;

/// `content · ∏ factorᵉ` with monic irreducible factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub content: Rational,
    pub factors: Vec<(UniPoly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::constant(self.content.clone()), |acc, (f, e)| &acc * &f.pow(*e))
    }
}

/// Factors a nonzero polynomial over ℚ into monic irreducibles.
pub fn factor_rational(f: &UniPoly) -> Result<Factorization> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    if deg > FACTOR_DEGREE_CAP {
        return Err(Error::DegreeCap(deg));
    }
    let content = f.lc();
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(&f.monic()) {
        for g in factor_squarefree(&part) {
            factors.push((g, mult));
        }
    }
    factors.sort_by(|(a, ea), (b, eb)| {
        a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())).then(ea.cmp(eb))
    });
    Ok(Factorization { content, factors })
}

/// Monic irreducible factors of a squarefree polynomial (each with multiplicity one).
pub fn irreducible_factors(f: &UniPoly) -> Result<Vec<UniPoly>> {
    Ok(factor_rational(f)?.factors.into_iter().map(|(g, _)| g).collect())
}

pub fn is_irreducible(f: &UniPoly) -> Result<bool> {
    let fac = factor_rational(f)?;
    Ok(f.degree() != Some(0) && fac.factors.len() == 1 && fac.factors[0].1 == 1)
}

/// Yun's algorithm on a monic polynomial: pairs `(a_i, i)` with `f = ∏ a_iⁱ`.
pub fn squarefree_decomposition(f: &UniPoly) -> Vec<(UniPoly, u32)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let fp = f.derivative();
    let a0 = f.gcd(&fp);
    let mut b = f.exact_div(&a0).expect("gcd divides");
    let mut c = fp.exact_div(&a0).expect("gcd divides derivative");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        b = b.exact_div(&a).expect("gcd divides");
        c = d.exact_div(&a).expect("gcd divides");
        d = &c - &b.derivative();
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.monic(), i));
        }
        i += 1;
    }
    out
}

fn factor_squarefree(f: &UniPoly) -> Vec<UniPoly> {
    let n = f.degree().expect("nonzero");
    if n <= 1 {
        return vec![f.monic()];
    }
    let (_, prim) = f.primitive_integer_part();
    zassenhaus(&prim).into_iter().map(|g| UniPoly::from_integers(&g).monic()).collect()
}

fn reduce_mod(f: &[BigInt], p: u64) -> ModPoly {
    let pb = BigInt::from(p);
    ModPoly::new(p, f.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

fn choose_prime(f: &[BigInt]) -> u64 {
    let lc = f.last().unwrap();
    let mut p = 3u64;
    loop {
        if is_small_prime(p) && !(lc % BigInt::from(p)).is_zero() {
            let fp = reduce_mod(f, p);
            if fp.gcd(&fp.derivative()).degree() == Some(0) {
                return p;
            }
        }
        p += 2;
    }
}

fn is_small_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn sym_mod(x: &BigInt, m: &BigInt) -> BigInt {
    let r = x.mod_floor(m);
    if &r + &r > *m {
        r - m
    } else {
        r
    }
}

/// Integer polynomial (low-first) helpers.
fn int_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn int_mod(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = a.iter().map(|c| c.mod_floor(m)).collect();
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn to_int(f: &ModPoly) -> Vec<BigInt> {
    f.c.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lifts `f ≡ a·b (mod p)` with `a, b` monic and coprime mod p to the same
/// factorization modulo `p^k`. `f` is taken modulo `p^k` with unit leading
/// coefficient folded into `b`'s partner by the caller.
fn hensel_lift_pair(
    f: &[BigInt],
    a: &ModPoly,
    b: &ModPoly,
    k: u32,
) -> (Vec<BigInt>, Vec<BigInt>) {
    let p = a.p;
    let pb = BigInt::from(p);
    let (g, s, t) = a.ext_gcd(b);
    debug_assert_eq!(g.degree(), Some(0));
    let mut big_a = to_int(a);
    let mut big_b = to_int(b);
    let mut pj = pb.clone();
    for _ in 1..k {
        let next = &pj * &pb;
        let prod = int_mul(&big_a, &big_b);
        let n = f.len().max(prod.len());
        let e: Vec<BigInt> = (0..n)
            .map(|i| {
                let fi = f.get(i).cloned().unwrap_or_default();
                let pi = prod.get(i).cloned().unwrap_or_default();
                let diff = (fi - pi).mod_floor(&next);
                debug_assert!((&diff % &pj).is_zero());
                diff / &pj
            })
            .collect();
        let c = reduce_mod(&e, p);
        // a·δb + b·δa ≡ c with δa = t·c mod a, δb = s·c mod b.
        let da = t.mul(&c).rem(a);
        let db = s.mul(&c).rem(b);
        let add = |x: &mut Vec<BigInt>, d: &ModPoly| {
            for (i, ci) in d.c.iter().enumerate() {
                if i >= x.len() {
                    x.resize(i + 1, BigInt::zero());
                }
                x[i] += BigInt::from(*ci) * &pj;
            }
        };
        add(&mut big_a, &da);
        add(&mut big_b, &db);
        big_a = int_mod(&big_a, &next);
        big_b = int_mod(&big_b, &next);
        pj = next;
    }
    (big_a, big_b)
}

/// Lifts the monic modular factors of `lc⁻¹·f` to monic factors modulo `p^k`.
fn hensel_lift_all(f: &[BigInt], factors: &[ModPoly], k: u32) -> Vec<Vec<BigInt>> {
    let p = factors[0].p;
    let m = num::pow::pow(BigInt::from(p), k as usize);
    let lc = f.last().unwrap();
    let lc_inv = lc.modinv(&m).expect("lc is a unit mod p");
    let mut target = int_mod(&f.iter().map(|c| c * &lc_inv).collect::<Vec<_>>(), &m);
    let mut out = Vec::new();
    for i in 0..factors.len() - 1 {
        let a = &factors[i];
        let rest = factors[i + 1..].iter().fold(ModPoly::one(p), |acc, g| acc.mul(g));
        let (la, lb) = hensel_lift_pair(&target, a, &rest, k);
        out.push(la);
        target = lb;
    }
    out.push(target);
    out
}

fn int_exact_div(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    let df = f.len().checked_sub(1)?;
    let dg = g.len() - 1;
    if df < dg {
        return None;
    }
    let mut r = f.to_vec();
    let mut q = vec![BigInt::zero(); df - dg + 1];
    let lg = g.last().unwrap();
    for k in (0..q.len()).rev() {
        let (c, rem) = r[k + dg].div_rem(lg);
        if !rem.is_zero() {
            return None;
        }
        for (j, gj) in g.iter().enumerate() {
            r[k + j] -= &c * gj;
        }
        q[k] = c;
    }
    r.iter().all(Zero::is_zero).then_some(q)
}

fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let mut g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if v.last().unwrap().is_negative() {
        g = -g;
    }
    v.iter().map(|c| c / &g).collect()
}

/// Factors a primitive squarefree integer polynomial of degree ≥ 2.
fn zassenhaus(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    let p = choose_prime(f);
    let fp = reduce_mod(f, p).monic();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ p);
    let mut modular = Vec::new();
    for (g, d) in distinct_degree(&fp) {
        modular.extend(equal_degree(&g, d, &mut rng));
    }
    if modular.len() == 1 {
        return vec![f.to_vec()];
    }
    // Mignotte-style bound on coefficients of any factor of lc·f.
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let bound = (norm2.sqrt() + BigInt::one())
        * num::pow::pow(BigInt::from(2), n)
        * f.last().unwrap().abs();
    let two_b = bound * 2;
    let mut k = 1u32;
    let pb = BigInt::from(p);
    let mut m = pb.clone();
    while m <= two_b {
        m *= &pb;
        k += 1;
    }
    let lifted = hensel_lift_all(f, &modular, k);

    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut g = f.to_vec();
    let mut found = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= remaining.len() {
        let lc = g.last().unwrap().clone();
        for subset in combinations(&remaining, size) {
            let prod = subset.iter().fold(vec![lc.clone()], |acc, &i| {
                int_mod(&int_mul(&acc, &lifted[i]), &m)
            });
            let cand: Vec<BigInt> = prod.iter().map(|c| sym_mod(c, &m)).collect();
            let cand = primitive(&cand);
            if let Some(q) = int_exact_div(&g, &cand) {
                found.push(cand);
                g = q;
                remaining.retain(|i| !subset.contains(i));
                continue 'outer;
            }
        }
        size += 1;
    }
    found.push(primitive(&g));
    found
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}
