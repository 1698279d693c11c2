use std::cmp::Ordering;
use std::fmt;

use num::bigint::{BigInt, BigUint};
use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::arith::square_class;
use crate::field::Rational;

/// A place of ℚ: a prime or the real place.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Place {
    Prime(BigUint),
    Inf,
}

impl Place {
    pub fn prime(p: u64) -> Self {
        Place::Prime(BigUint::from(p))
    }
}

impl Ord for Place {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Place::Prime(a), Place::Prime(b)) => a.cmp(b),
            (Place::Prime(_), Place::Inf) => Ordering::Less,
            (Place::Inf, Place::Prime(_)) => Ordering::Greater,
            (Place::Inf, Place::Inf) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Prime(p) => write!(f, "{p}"),
            Place::Inf => f.write_str("inf"),
        }
    }
}

/// Splits `n = p^k·u` with `p ∤ u`.
fn split_valuation(n: &BigInt, p: &BigInt) -> (u32, BigInt) {
    let mut u = n.clone();
    let mut k = 0;
    while (&u % p).is_zero() {
        u /= p;
        k += 1;
    }
    (k, u)
}

/// Legendre symbol `(u | p)` for an odd prime `p ∤ u`, by Euler's criterion.
fn legendre(u: &BigInt, p: &BigInt) -> i8 {
    let pu = p.magnitude();
    let r = u.mod_floor(p).magnitude().modpow(&((pu - 1u32) >> 1), pu);
    if r.is_one() {
        1
    } else {
        -1
    }
}

/// `u mod 8` for odd `u`.
fn mod8(u: &BigInt) -> u32 {
    let r = u.mod_floor(&BigInt::from(8));
    r.iter_u32_digits().next().unwrap_or(0)
}

/// Hilbert symbol `(a, b)_v`, +1 or −1.
pub fn hilbert_symbol(a: &Rational, b: &Rational, v: &Place) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroInput);
    }
    // The symbol only depends on square classes.
    Ok(hilbert_on_classes(&square_class(a), &square_class(b), v))
}

/// The Hilbert symbol of two squarefree integers.
pub(crate) fn hilbert_on_classes(a: &BigInt, b: &BigInt, v: &Place) -> i8 {
    match v {
        Place::Inf => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Prime(p) if *p == BigUint::from(2u32) => {
            let two = BigInt::from(2);
            let (alpha, u) = split_valuation(a, &two);
            let (beta, w) = split_valuation(b, &two);
            let (u8_, w8) = (mod8(&u), mod8(&w));
            let eps = |x: u32| ((x + 8 - 1) / 2) % 2;
            let omega = |x: u32| ((x * x - 1) / 8) % 2;
            let e = eps(u8_) * eps(w8) + alpha * omega(w8) + beta * omega(u8_);
            if e % 2 == 0 {
                1
            } else {
                -1
            }
        }
        Place::Prime(p) => {
            let p = BigInt::from(p.clone());
            let (alpha, u) = split_valuation(a, &p);
            let (beta, w) = split_valuation(b, &p);
            let mut s: i8 = 1;
            let eps_p = ((&p - BigInt::one()) / BigInt::from(2)).is_odd();
            if alpha % 2 == 1 && beta % 2 == 1 && eps_p {
                s = -s;
            }
            if beta % 2 == 1 {
                s *= legendre(&u, &p);
            }
            if alpha % 2 == 1 {
                s *= legendre(&w, &p);
            }
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::arith::{factor_integer, rat, ratio};
    use proptest::prelude::*;

    fn h(a: i64, b: i64, p: u64) -> i8 {
        hilbert_symbol(&rat(a), &rat(b), &Place::prime(p)).unwrap()
    }

    #[test]
    fn examples() {
        for p in [2, 3, 5, 7] {
            assert_eq!(h(1, 13, p), 1);
        }
        assert_eq!(hilbert_symbol(&rat(-1), &rat(-1), &Place::Inf).unwrap(), -1);
        assert_eq!(h(2, 5, 5), -1);
        assert_eq!(h(3, 3, 3), -1);
        assert_eq!(h(-1, -1, 2), -1);
        assert_eq!(h(2, 3, 2), -1);
        assert_eq!(h(2, 7, 2), 1);
        assert_eq!(hilbert_symbol(&rat(0), &rat(1), &Place::Inf), Err(Error::ZeroInput));
        assert_eq!(
            hilbert_symbol(&ratio(3, 4), &ratio(12, 1), &Place::prime(3)).unwrap(),
            h(3, 3, 3)
        );
    }

    /// Brute force: is z² = a x² + b y² solvable nontrivially modulo p^k (a finite proxy)?
    /// For odd p with a, b squarefree, solvability mod p³ with a primitive solution
    /// decides the symbol.
    fn brute(a: i64, b: i64, p: i64) -> i8 {
        let m = if p == 2 { 64 } else { p * p * p };
        let mut is_sq = vec![false; m as usize];
        for z in 0..m {
            is_sq[((z * z) % m) as usize] = true;
        }
        for x in 0..m {
            for y in 0..m {
                if x % p == 0 && y % p == 0 {
                    continue;
                }
                if is_sq[(a * x * x + b * y * y).rem_euclid(m) as usize] {
                    return 1;
                }
            }
        }
        -1
    }

    #[test]
    fn agrees_with_brute_force_small_primes() {
        for p in [3i64, 5] {
            for a in [-6i64, -3, -2, -1, 1, 2, 3, 5, 6, 10] {
                for b in [-5i64, -1, 2, 3, 7, 15] {
                    assert_eq!(h(a, b, p as u64), brute(a, b, p), "({a},{b})_{p}");
                }
            }
        }
    }

    fn places(a: i64, b: i64) -> Vec<Place> {
        let mut v = vec![Place::prime(2), Place::Inf];
        for n in [a, b] {
            for (q, _) in factor_integer(&BigUint::from(n.unsigned_abs())) {
                let pl = Place::Prime(q);
                if !v.contains(&pl) {
                    v.push(pl);
                }
            }
        }
        v
    }

    proptest! {
        #[test]
        fn product_formula(a in -500i64..500, b in -500i64..500) {
            prop_assume!(a != 0 && b != 0);
            let prod: i8 = places(a, b)
                .iter()
                .map(|v| hilbert_symbol(&rat(a), &rat(b), v).unwrap())
                .product();
            prop_assert_eq!(prod, 1);
        }

        #[test]
        fn symmetric_and_bimultiplicative(a in -60i64..60, b1 in -60i64..60, b2 in -60i64..60) {
            prop_assume!(a != 0 && b1 != 0 && b2 != 0);
            for v in places(a, b1 * b2).iter().chain(places(b1, b2).iter()) {
                let s = |x: i64, y: i64| hilbert_symbol(&rat(x), &rat(y), v).unwrap();
                prop_assert_eq!(s(a, b1 * b2), s(a, b1) * s(a, b2));
                prop_assert_eq!(s(a, b1), s(b1, a));
            }
        }
    }
}
