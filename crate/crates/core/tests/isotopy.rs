use proptest::prelude::*;

use gw_writhe::field::{rat, Matrix, UniPoly};
use gw_writhe::gw::{gw_equal, gw_from_matrix, GWClass, SymBilForm};
use gw_writhe::isotopy::{
    cazanave_class, cazanave_curve, cazanave_phi, embedding_writhe_deg4, isotopic_deg3, isotopic_deg4,
    isotopy_invariant_deg3, EmbeddingDeg3, PointedRationalMap,
};
use gw_writhe::writhe::{hankel_lambda, hankel_lambda_from_coords, wedge_coords, RationalCurve};
use gw_writhe::Error;

fn std_cubic() -> RationalCurve {
    RationalCurve::from_i64([&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]).unwrap()
}

fn matrix(v: &[i64]) -> Matrix {
    Matrix::from_rows(v.chunks(4).map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
}

#[test]
fn degree_three_examples() {
    let e = EmbeddingDeg3::from_curve(std_cubic()).unwrap();
    assert_eq!(isotopy_invariant_deg3(&e), rat(1));
    let doubled = EmbeddingDeg3::from_curve(std_cubic().compose(&Matrix::diagonal(&[rat(2), rat(1), rat(1), rat(1)])).unwrap()).unwrap();
    assert_eq!(isotopy_invariant_deg3(&doubled), rat(2));
    assert!(!isotopic_deg3(&e, &doubled));
    let five = EmbeddingDeg3::from_curve(std_cubic().compose(&Matrix::identity(4).scale(&rat(5))).unwrap()).unwrap();
    assert_eq!(isotopy_invariant_deg3(&five), rat(625));
    assert!(isotopic_deg3(&e, &five));
    assert!(matches!(EmbeddingDeg3::from_curve(RationalCurve::standard_quartic()), Err(Error::DegreeConstraint(_))));
}

#[test]
fn degree_four_examples() {
    let std = RationalCurve::standard_quartic();
    let (g, d) = embedding_writhe_deg4(&std).unwrap();
    assert!(gw_equal(&g, &GWClass::from_i64(&[1, 1, -1])));
    assert_eq!(d, rat(-1));

    let two = RationalCurve::from_i64([&[2, 0, 0, 0, 0], &[0, 1, 0, 0, 0], &[0, 0, 0, 1, 0], &[0, 0, 0, 0, 1]]).unwrap();
    let (g2, d2) = embedding_writhe_deg4(&two).unwrap();
    // Λ scales linearly with the wedge coordinates.
    let anti2 = SymBilForm::from_i64(&[&[0, 0, 2], &[0, 2, 0], &[2, 0, 0]]).unwrap();
    assert_eq!(hankel_lambda(&two).unwrap(), anti2);
    assert!(gw_equal(&g2, &gw_from_matrix(&anti2).unwrap()));
    assert_eq!(d2, rat(-8));
    assert_eq!(g2.invariants().disc, (-2).into());
    assert!(!isotopic_deg4(&std, &two).unwrap());

    let three = std.compose(&Matrix::identity(4).scale(&rat(3))).unwrap();
    assert_eq!(embedding_writhe_deg4(&three).unwrap().1, -num::pow(rat(3), 12));
    assert!(isotopic_deg4(&std, &three).unwrap());
}

#[test]
fn cazanave_examples() {
    let cube = PointedRationalMap::new(UniPoly::from_i64(&[0, 0, 0, 1]), UniPoly::from_i64(&[1])).unwrap();
    assert_eq!(cazanave_phi(&cube), [0, 0, 1, 0, 0].map(rat));
    assert_eq!(hankel_lambda_from_coords(&cazanave_phi(&cube)), SymBilForm::from_i64(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]).unwrap());
    let (g, d) = cazanave_class(&cube);
    assert!(gw_equal(&g, &GWClass::from_i64(&[1, 1, -1])));
    assert_eq!(d, rat(-1));

    let m = PointedRationalMap::new(UniPoly::from_i64(&[0, -1, 0, 1]), UniPoly::from_i64(&[1])).unwrap();
    assert_eq!(cazanave_phi(&m), [0, 0, 1, 0, 1].map(rat));
    let (g, d) = cazanave_class(&m);
    assert!(gw_equal(&g, &gw_from_matrix(&SymBilForm::from_i64(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 1]]).unwrap()).unwrap()));
    assert_eq!(d, rat(-1));

    // Shifting t ↦ t − 1 acts on B₃ by a unipotent congruence, so class and det are unchanged.
    let shift = |p: &UniPoly| p.compose_linear(&rat(1), &rat(-1));
    let shifted = PointedRationalMap::new(shift(cube.f()), shift(cube.g())).unwrap();
    assert_eq!(shifted.f(), &UniPoly::from_i64(&[-1, 3, -3, 1]));
    let (gs, ds) = cazanave_class(&shifted);
    assert!(gw_equal(&gs, &cazanave_class(&cube).0));
    assert_eq!(ds, rat(-1));
    // The congruence itself: row i holds the coefficients of (x − 1)^i.
    let p = Matrix::from_rows(vec![
        vec![rat(1), rat(0), rat(0)],
        vec![rat(-1), rat(1), rat(0)],
        vec![rat(1), rat(-2), rat(1)],
    ]);
    assert_eq!(cube.bezout().congruent(&p), shifted.bezout());
}

#[test]
fn invalid_maps() {
    let p = UniPoly::from_i64;
    assert!(matches!(PointedRationalMap::new(p(&[0, 0, 2]), p(&[1])), Err(Error::DegreeConstraint(_))));
    assert!(matches!(PointedRationalMap::new(p(&[0, 0, 0, 2]), p(&[1])), Err(Error::DegreeConstraint(_))));
    assert!(matches!(PointedRationalMap::new(p(&[0, 0, 0, 1]), p(&[0, 0, 0, 1])), Err(Error::DegreeConstraint(_))));
    assert!(matches!(PointedRationalMap::new(p(&[0, -1, 0, 1]), p(&[1, 1])), Err(Error::NotCoprime)));
    assert!(matches!(PointedRationalMap::new(p(&[0, -1, 0, 1]), p(&[0])), Err(Error::NotCoprime)));
}

fn cubic_strategy() -> impl Strategy<Value = EmbeddingDeg3> {
    (prop::collection::vec(-3i64..=3, 16), prop::sample::select(vec![1i64, 2, 3, 16, 81, -1, -16]))
        .prop_filter_map("singular", |(m, s)| {
            let a = &matrix(&m) * &Matrix::diagonal(&[rat(s), rat(1), rat(1), rat(1)]);
            EmbeddingDeg3::from_curve(std_cubic().compose(&a).ok()?).ok()
        })
}

fn quartic_strategy() -> impl Strategy<Value = RationalCurve> {
    (prop::collection::vec(-2i64..=2, 16), prop::sample::select(vec![1i64, 2, -1, 3]))
        .prop_filter_map("singular", |(m, s)| {
            let a = matrix(&m);
            if a.det() == rat(0) {
                return None;
            }
            let a = &a * &Matrix::diagonal(&[rat(s), rat(1), rat(1), rat(1)]);
            RationalCurve::standard_quartic().compose(&a).ok()
        })
}

fn pair_strategy() -> impl Strategy<Value = PointedRationalMap> {
    (prop::collection::vec(-4i64..=4, 3), prop::collection::vec(-4i64..=4, 3)).prop_filter_map("not coprime", |(mut f, g)| {
        f.push(1);
        PointedRationalMap::new(UniPoly::from_i64(&f), UniPoly::from_i64(&g)).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn isotopy_deg3_is_an_equivalence(a in cubic_strategy(), b in cubic_strategy(), c in cubic_strategy()) {
        prop_assert!(isotopic_deg3(&a, &a));
        prop_assert_eq!(isotopic_deg3(&a, &b), isotopic_deg3(&b, &a));
        if isotopic_deg3(&a, &b) && isotopic_deg3(&b, &c) {
            prop_assert!(isotopic_deg3(&a, &c));
        }
    }

    #[test]
    fn isotopy_deg4_is_an_equivalence(a in quartic_strategy(), b in quartic_strategy(), c in quartic_strategy()) {
        let iso = |x: &RationalCurve, y: &RationalCurve| isotopic_deg4(x, y).unwrap();
        prop_assert!(iso(&a, &a));
        prop_assert_eq!(iso(&a, &b), iso(&b, &a));
        if iso(&a, &b) && iso(&b, &c) {
            prop_assert!(iso(&a, &c));
        }
        // Soundness: isotopic curves have equal writhe classes.
        if iso(&a, &b) {
            prop_assert!(gw_equal(&embedding_writhe_deg4(&a).unwrap().0, &embedding_writhe_deg4(&b).unwrap().0));
        }
    }

    #[test]
    fn cazanave_translation(m in pair_strategy()) {
        let h = m.hankel();
        prop_assert_eq!(hankel_lambda_from_coords(&cazanave_phi(&m)), h.clone());
        let c = cazanave_curve(&m).unwrap();
        prop_assert_eq!(wedge_coords(&c).unwrap(), cazanave_phi(&m));
        let (bclass, bdet) = cazanave_class(&m);
        prop_assert_eq!(h.det(), bdet.clone());
        prop_assert!(gw_equal(&gw_from_matrix(&h).unwrap(), &bclass));
        let (wclass, wdet) = embedding_writhe_deg4(&c).unwrap();
        prop_assert!(gw_equal(&wclass, &bclass));
        prop_assert_eq!(wdet, bdet);
    }
}
