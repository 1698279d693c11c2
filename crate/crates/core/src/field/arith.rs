//! Rational scalars, integer factorization and power-class tests over ℚ.

use std::str::FromStr;

use num::bigint::{BigInt, BigUint};
use num::{BigRational, Integer as _, One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational literal {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// `p` or `p/q`, the same text `parse_rational` accepts.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

const TRIAL_LIMIT: u64 = 1 << 12;

/// Prime factorization of a positive integer, primes ascending.
///
/// Trial division by small primes, then Miller–Rabin and Pollard–Brent rho on the cofactor.
pub fn factor_integer(n: &BigUint) -> Vec<(BigUint, u32)> {
    assert!(!n.is_zero(), "cannot factor zero");
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    let mut n = n.clone();
    let push = |p: BigUint, e: u32, out: &mut Vec<(BigUint, u32)>| {
        if let Some(entry) = out.iter_mut().find(|(q, _)| *q == p) {
            entry.1 += e;
        } else {
            out.push((p, e));
        }
    };
    let mut p: u64 = 2;
    while p <= TRIAL_LIMIT {
        let pb = BigUint::from(p);
        if &pb * &pb > n {
            break;
        }
        let mut e = 0;
        while (&n % &pb).is_zero() {
            n /= &pb;
            e += 1;
        }
        if e > 0 {
            push(pb, e, &mut out);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !n.is_one() {
        let mut stack = vec![n];
        while let Some(m) = stack.pop() {
            if m.is_one() {
                continue;
            }
            if is_probable_prime(&m) {
                push(m, 1, &mut out);
                continue;
            }
            if let Some(r) = perfect_square_root(&m) {
                stack.push(r.clone());
                stack.push(r);
                continue;
            }
            let d = pollard_brent(&m);
            stack.push(&m / &d);
            stack.push(d);
        }
    }
    out.sort();
    out
}

fn perfect_square_root(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        const M: u64 = 128;
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..M.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += M;
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g != one {
                    break;
                }
            }
        }
        if g != *n {
            return g;
        }
        c += 1u32;
    }
}

/// Squarefree part of a nonzero integer, keeping the sign.
pub fn squarefree_integer(n: &BigInt) -> BigInt {
    assert!(!n.is_zero(), "squarefree part of zero");
    let mut out = BigUint::one();
    for (p, e) in factor_integer(n.magnitude()) {
        if e % 2 == 1 {
            out *= p;
        }
    }
    BigInt::from_biguint(n.sign(), out)
}

/// Canonical representative of the square class of a nonzero rational:
/// the signed squarefree integer d with q ∈ d·ℚ^{×2}.
pub fn square_class(q: &Rational) -> BigInt {
    assert!(!q.is_zero(), "square class of zero");
    squarefree_integer(&(q.numer() * q.denom()))
}

pub fn is_square(q: &Rational) -> bool {
    !q.is_negative() && (q.is_zero() || square_class(q).is_one())
}

/// Exact k-th root of a nonnegative integer, if it exists.
fn exact_root(n: &BigUint, k: u32) -> Option<BigUint> {
    let r = n.nth_root(k);
    (num::pow::pow(r.clone(), k as usize) == *n).then_some(r)
}

/// True iff a/b is a k-th power in ℚ^×.
pub fn is_kth_power_class(a: &Rational, b: &Rational, k: u32) -> Result<bool> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroInput);
    }
    if k == 0 {
        return Err(Error::DegreeConstraint("power must be positive".into()));
    }
    let q = a / b;
    if q.is_negative() && k % 2 == 0 {
        return Ok(false);
    }
    Ok(exact_root(q.numer().magnitude(), k).is_some()
        && exact_root(q.denom().magnitude(), k).is_some())
}

/// Odd primes plus 2 dividing a nonzero integer.
pub fn prime_divisors(n: &BigInt) -> Vec<BigUint> {
    factor_integer(n.magnitude()).into_iter().map(|(p, _)| p).collect()
}
