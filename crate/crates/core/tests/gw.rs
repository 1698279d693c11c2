use num::Zero;
use proptest::prelude::*;

use gw_writhe::field::{rat, Matrix, Rational, UniPoly};
use gw_writhe::gw::{
    bezout_matrix, diagonalize, gw_equal, gw_from_matrix, hankel_matrix, hilbert_symbol, trace_form, GWClass, Place,
    SymBilForm,
};
use gw_writhe::numfield::NumberField;

fn form(rows: &[&[i64]]) -> SymBilForm {
    SymBilForm::from_i64(rows).unwrap()
}

fn class(rows: &[&[i64]]) -> GWClass {
    gw_from_matrix(&form(rows)).unwrap()
}

/// Local solvability of z² = ax² + by² by searching primitive solutions modulo p^k.
/// For squarefree a, b this decides the Hilbert symbol once k ≥ 3 (odd p) or k ≥ 6 (p = 2).
fn brute_hilbert(a: i64, b: i64, p: i64) -> i8 {
    let k = if p == 2 { 6 } else { 3 };
    let m = p.pow(k);
    let mut square_any = vec![false; m as usize];
    let mut square_unit = vec![false; m as usize];
    for z in 0..m {
        let r = (z * z % m) as usize;
        square_any[r] = true;
        if z % p != 0 {
            square_unit[r] = true;
        }
    }
    for x in 0..m {
        for y in 0..m {
            let r = ((a * x * x + b * y * y) % m + m) % m;
            let primitive_xy = x % p != 0 || y % p != 0;
            if (primitive_xy && square_any[r as usize]) || square_unit[r as usize] {
                return 1;
            }
        }
    }
    -1
}

fn squarefree(n: i64) -> bool {
    n != 0 && (2..=n.abs()).take_while(|d| d * d <= n.abs()).all(|d| n % (d * d) != 0)
}

#[test]
fn diagonalize_examples() {
    let (d, t) = diagonalize(&form(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]));
    assert_eq!(d, vec![rat(1), rat(2), rat(3)]);
    assert_eq!(t, Matrix::identity(3));

    let h = form(&[&[0, 1], &[1, 0]]);
    let (d, t) = diagonalize(&h);
    assert_eq!(h.congruent(&t).matrix(), &Matrix::diagonal(&d));
    assert!(gw_equal(&GWClass::new(d).unwrap(), &GWClass::from_i64(&[1, -1])));

    let (d, _) = diagonalize(&form(&[&[1, 2], &[2, 5]]));
    assert!(gw_equal(&GWClass::new(d).unwrap(), &GWClass::from_i64(&[1, 1])));

    // Singular forms keep their radical as zero entries.
    let (d, t) = diagonalize(&form(&[&[1, 1], &[1, 1]]));
    assert_eq!(d.iter().filter(|x| x.is_zero()).count(), 1);
    assert!(!t.det().is_zero());
}

#[test]
fn class_examples() {
    assert!(gw_equal(&class(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]), &GWClass::from_i64(&[1, 1, -1])));
    assert!(gw_equal(&class(&[&[20]]), &GWClass::from_i64(&[5])));
    assert!(gw_equal(&GWClass::from_i64(&[1, 1]), &GWClass::from_i64(&[2, 2])));
    assert!(!gw_equal(&GWClass::from_i64(&[1, 1]), &GWClass::from_i64(&[3, 3])));
    assert!(!gw_equal(&GWClass::from_i64(&[1, 1]), &GWClass::from_i64(&[1, -1])));
    assert!(gw_from_matrix(&form(&[&[1, 1], &[1, 1]])).is_err());
}

#[test]
fn invariant_examples() {
    let inv = GWClass::from_i64(&[1, -1]).invariants();
    assert_eq!((inv.rank, inv.signature, inv.disc.clone()), (2, 0, (-1).into()));
    assert!(inv.hasse.values().all(|&s| s == 1));

    let inv = GWClass::from_i64(&[3, 3]).invariants();
    assert_eq!((inv.rank, inv.signature, inv.disc.clone()), (2, 2, 1.into()));
    assert_eq!(inv.hasse[&Place::prime(3)], -1);
    assert_eq!(brute_hilbert(3, 3, 3), -1);

    let inv = GWClass::from_i64(&[12]).invariants();
    assert_eq!(inv.disc, 3.into());
}

#[test]
fn hilbert_examples() {
    for v in [Place::prime(2), Place::prime(3), Place::prime(7), Place::Inf] {
        assert_eq!(hilbert_symbol(&rat(1), &rat(-7), &v).unwrap(), 1);
    }
    assert_eq!(hilbert_symbol(&rat(-1), &rat(-1), &Place::Inf).unwrap(), -1);
    assert_eq!(hilbert_symbol(&rat(2), &rat(5), &Place::prime(5)).unwrap(), -1);
    assert_eq!(brute_hilbert(2, 5, 5), -1);
    assert!(hilbert_symbol(&rat(0), &rat(5), &Place::prime(5)).is_err());
}

#[test]
fn hilbert_matches_brute_force() {
    for p in [2i64, 3, 5, 7] {
        for a in -15i64..=15 {
            for b in -15i64..=15 {
                if !squarefree(a) || !squarefree(b) {
                    continue;
                }
                let got = hilbert_symbol(&rat(a), &rat(b), &Place::prime(p as u64)).unwrap();
                assert_eq!(got, brute_hilbert(a, b, p), "({a}, {b})_{p}");
            }
        }
    }
}

#[test]
fn trace_form_examples() {
    let q = NumberField::rationals();
    assert!(gw_equal(&trace_form(&q, &q.from_i64(5)).unwrap(), &GWClass::from_i64(&[5])));
    let i = NumberField::new(&UniPoly::from_i64(&[1, 0, 1])).unwrap();
    assert!(gw_equal(&trace_form(&i, &i.one()).unwrap(), &GWClass::from_i64(&[2, -2])));
    let s = NumberField::new(&UniPoly::from_i64(&[-2, 0, 1])).unwrap();
    assert!(gw_equal(&trace_form(&s, &s.one()).unwrap(), &GWClass::from_i64(&[2, 1])));
}

#[test]
fn bezout_and_hankel_examples() {
    let p = UniPoly::from_i64;
    assert_eq!(bezout_matrix(&p(&[-3, 1]), &p(&[7]), 1).unwrap(), form(&[&[7]]));
    assert_eq!(bezout_matrix(&p(&[0, 0, 0, 1]), &p(&[1]), 3).unwrap(), form(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]));
    assert_eq!(bezout_matrix(&p(&[-1, 0, 1]), &p(&[0, 1]), 2).unwrap(), form(&[&[1, 0], &[0, 1]]));
    assert_eq!(hankel_matrix(&p(&[-3, 1]), &p(&[7]), 1).unwrap(), form(&[&[7]]));
    assert_eq!(hankel_matrix(&p(&[0, 0, 0, 1]), &p(&[1]), 3).unwrap(), form(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]));
    assert_eq!(hankel_matrix(&p(&[0, -1, 0, 1]), &p(&[1]), 3).unwrap(), form(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 1]]));
    assert!(bezout_matrix(&p(&[0, 0, 2]), &p(&[1]), 2).is_err());
}

fn nonzero() -> impl Strategy<Value = Rational> {
    (prop_oneof![-60i64..=-1, 1i64..=60], 1i64..=12).prop_map(|(n, d)| rat(n) / rat(d))
}

fn coprime_pair(n: usize) -> impl Strategy<Value = (UniPoly, UniPoly)> {
    (prop::collection::vec(-5i64..=5, n), prop::collection::vec(-5i64..=5, n)).prop_map(|(mut f, g)| {
        f.push(1);
        (UniPoly::from_i64(&f), UniPoly::from_i64(&g))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn congruence_invariance(diag in prop::collection::vec(nonzero(), 1..=4), p in prop::collection::vec(-4i64..=4, 16)) {
        let n = diag.len();
        let pm = Matrix::from_rows((0..n).map(|i| (0..n).map(|j| rat(p[i * 4 + j])).collect()).collect());
        prop_assume!(!pm.det().is_zero());
        let m = SymBilForm::new(Matrix::diagonal(&diag)).unwrap();
        let moved = gw_from_matrix(&m.congruent(&pm)).unwrap();
        prop_assert!(gw_equal(&moved, &GWClass::new(diag).unwrap()));
    }

    #[test]
    fn hilbert_bimultiplicative_and_symmetric(a in nonzero(), b1 in nonzero(), b2 in nonzero(), pi in 0usize..5) {
        let v = [Place::prime(2), Place::prime(3), Place::prime(5), Place::prime(7), Place::Inf][pi].clone();
        let h = |x: &Rational, y: &Rational| hilbert_symbol(x, y, &v).unwrap();
        prop_assert_eq!(h(&a, &(&b1 * &b2)), h(&a, &b1) * h(&a, &b2));
        prop_assert_eq!(h(&a, &b1), h(&b1, &a));
    }

    #[test]
    fn product_formula(a in nonzero(), b in nonzero()) {
        let places = GWClass::new(vec![a.clone(), b.clone()]).unwrap().places();
        prop_assert!(places.contains(&Place::Inf));
        let prod: i8 = places.iter().map(|v| hilbert_symbol(&a, &b, v).unwrap()).product();
        prop_assert_eq!(prod, 1);
    }

    #[test]
    fn hankel_and_bezout_agree((f, g) in coprime_pair(3)) {
        let res = f.resultant(&g).unwrap();
        let h = hankel_matrix(&f, &g, 3).unwrap();
        prop_assert_eq!(h.det().is_zero(), res.is_zero());
        prop_assume!(!res.is_zero());
        let b = bezout_matrix(&f, &g, 3).unwrap();
        prop_assert_eq!(h.det(), b.det());
        prop_assert!(gw_equal(&gw_from_matrix(&h).unwrap(), &gw_from_matrix(&b).unwrap()));
    }

    #[test]
    fn trace_form_square_scaling(a in prop::collection::vec(-5i64..=5, 3), b in prop::collection::vec(-5i64..=5, 3)) {
        let k = NumberField::new(&UniPoly::from_i64(&[-3, 1, 0, 1])).unwrap();
        let el = |v: &[i64]| k.from_coords(v.iter().map(|&c| rat(c)).collect()).unwrap();
        let (a, b) = (el(&a), el(&b));
        prop_assume!(!a.is_zero() && !b.is_zero());
        let ab2 = a.try_mul(&b.try_mul(&b).unwrap()).unwrap();
        prop_assert!(gw_equal(&trace_form(&k, &ab2).unwrap(), &trace_form(&k, &a).unwrap()));
    }
}
