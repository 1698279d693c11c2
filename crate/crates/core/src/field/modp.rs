//! Polynomials over the prime field 𝔽_p, p < 2³¹.

use num::bigint::BigUint;
use num::One;
use rand::Rng;

/// Dense polynomial over 𝔽_p, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ModPoly {
    pub p: u64,
    pub c: Vec<u64>,
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a % p, p - 2, p)
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

impl ModPoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        Self { p, c }
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lc(&self) -> u64 {
        self.c.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.lc(), self.p);
        self.scale(inv)
    }

    pub fn scale(&self, k: u64) -> Self {
        Self::new(self.p, self.c.iter().map(|x| x * (k % self.p) % self.p).collect())
    }

    #[allow(dead_code)]
    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let g = |v: &Vec<u64>, i: usize| v.get(i).copied().unwrap_or(0);
        Self::new(self.p, (0..n).map(|i| (g(&self.c, i) + g(&o.c, i)) % self.p).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let g = |v: &Vec<u64>, i: usize| v.get(i).copied().unwrap_or(0);
        Self::new(
            self.p,
            (0..n).map(|i| (g(&self.c, i) + self.p - g(&o.c, i)) % self.p).collect(),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::new(self.p, vec![]);
        }
        let mut out = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % self.p;
            }
        }
        Self::new(self.p, out)
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial mod p");
        let p = self.p;
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Self::new(p, vec![]), self.clone());
        }
        let inv = inv_mod(d.lc(), p);
        let mut q = vec![0u64; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd] * inv % p;
            if c != 0 {
                for (j, dj) in d.c.iter().enumerate() {
                    r[k + j] = (r[k + j] + p - c * dj % p) % p;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(p, q), Self::new(p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s·self + t·o = g` monic.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::new(p, vec![]));
        let (mut t0, mut t1) = (Self::new(p, vec![]), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = inv_mod(r0.lc(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.p,
            self.c.iter().enumerate().skip(1).map(|(i, c)| (i as u64 % self.p) * c % self.p).collect(),
        )
    }

    pub fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut r = Self::one(self.p).rem(m);
        for i in 0..e.bits() {
            if e.bit(i) {
                r = r.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
        }
        r
    }
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// pairs `(g_d, d)` where `g_d` is the product of all irreducible factors of degree `d`.
pub(crate) fn distinct_degree(f: &ModPoly) -> Vec<(ModPoly, usize)> {
    let p = f.p;
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = ModPoly::x(p);
    let mut d = 0;
    while let Some(deg) = rest.degree() {
        if deg < 2 * (d + 1) {
            break;
        }
        d += 1;
        h = h.pow_mod(&BigUint::from(p), &rest);
        let g = h.sub(&ModPoly::x(p)).gcd(&rest);
        if g.degree().unwrap_or(0) > 0 {
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        let deg = rest.degree().unwrap();
        out.push((rest.monic(), deg));
    }
    out
}

/// Cantor–Zassenhaus equal-degree splitting of a monic product of degree-`d` irreducibles.
pub(crate) fn equal_degree<R: Rng>(f: &ModPoly, d: usize, rng: &mut R) -> Vec<ModPoly> {
    let n = f.degree().unwrap();
    if n == d {
        return vec![f.monic()];
    }
    let p = f.p;
    let e = (num::pow::pow(BigUint::from(p), d) - BigUint::one()) >> 1;
    loop {
        let a = ModPoly::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g = a.gcd(f);
        let split = if g.degree().unwrap() > 0 {
            g
        } else {
            a.pow_mod(&e, f).sub(&ModPoly::one(p)).gcd(f)
        };
        let k = split.degree().unwrap_or(0);
        if k > 0 && k < n {
            let other = f.div_rem(&split).0;
            let mut out = equal_degree(&split, d, rng);
            out.extend(equal_degree(&other.monic(), d, rng));
            return out;
        }
    }
}
