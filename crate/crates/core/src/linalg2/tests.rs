use proptest::prelude::*;

use super::*;
use crate::exactfield::{cyclotomic_field, finite_field, FieldSpec};

fn gaussian() -> (Field, FieldElement) {
    cyclotomic_field(4)
}

fn f5() -> Field {
    Field::new(&FieldSpec::Prime { p: 5 }).unwrap()
}

#[test]
fn determinant_and_trace() {
    let q = Field::rational();
    assert!(Mat2::identity(&q).det().is_one());
    let (k, i) = gaussian();
    let half = k.from_i64(2).inv().unwrap();
    let one = k.one();
    let m2 = Mat2::new(&one + &i, &one + &i, &i - &one, &one - &i).scale(&half);
    let m3 = Mat2::from_i64(&k, [[0, 1], [-1, 0]]);
    let c = m2.commutator(&m3);
    assert_eq!(c.det(), k.from_i64(2));
    assert!(c.trace().is_zero());
}

#[test]
fn inverses() {
    let q = Field::rational();
    assert_eq!(Mat2::identity(&q).inv().unwrap(), Mat2::identity(&q));
    let d = Mat2::diag(q.from_i64(2), q.from_i64(-3));
    let expected = Mat2::diag(q.from_i64(2).inv().unwrap(), q.from_i64(-3).inv().unwrap());
    assert_eq!(d.inv().unwrap(), expected);
    let u = Mat2::from_i64(&q, [[1, 1], [0, 1]]);
    let ui = u.inv().unwrap();
    assert_eq!(ui, Mat2::from_i64(&q, [[1, -1], [0, 1]]));
    assert!(u.mul(&ui).is_identity());
    assert_eq!(
        Mat2::from_i64(&q, [[1, 2], [2, 4]]).inv(),
        Err(LinalgError::SingularMatrix)
    );
}

#[test]
fn normalization_examples() {
    let q = Field::rational();
    let s = ProjElem::new(&Mat2::scalar(&q.from_i64(2))).unwrap();
    assert!(s.is_identity());
    let (b, c) = (q.from_i64(3), q.from_i64(-7));
    let anti = Mat2::new(q.zero(), b.clone(), c.clone(), q.zero());
    let n = ProjElem::new(&anti).unwrap();
    assert_eq!(
        n.rep(),
        &Mat2::new(q.zero(), q.one(), &c * &b.inv().unwrap(), q.zero())
    );
    let (a, d) = (q.from_i64(5), q.from_i64(2));
    let n = ProjElem::new(&Mat2::diag(a.clone(), d.clone())).unwrap();
    assert_eq!(n.rep(), &Mat2::diag(q.one(), &d * &a.inv().unwrap()));
    assert_eq!(ProjElem::new(&Mat2::zero(&q)), Err(LinalgError::ZeroMatrix));
    assert_eq!(
        ProjElem::new(&Mat2::from_i64(&q, [[1, 2], [2, 4]])),
        Err(LinalgError::SingularMatrix)
    );
}

#[test]
fn group_law_examples() {
    let (k, zeta) = cyclotomic_field(7);
    let g = ProjElem::new(&Mat2::from_i64(&k, [[2, 1], [5, 3]])).unwrap();
    assert!(g.mul(&g.inv()).is_identity());
    let l = zeta.clone();
    let m = &zeta * &zeta;
    let a = ProjElem::new(&Mat2::diag(k.one(), l.clone())).unwrap();
    let b = ProjElem::new(&Mat2::diag(k.one(), m.clone())).unwrap();
    assert_eq!(a.mul(&b).rep(), &Mat2::diag(k.one(), &l * &m));
}

#[test]
fn order_examples() {
    let q = Field::rational();
    assert_eq!(ProjElem::identity(&q).order(120), Some(1));
    let u = ProjElem::new(&Mat2::from_i64(&f5(), [[1, 1], [0, 1]])).unwrap();
    assert_eq!(proj_order(&u, 120), Some(5));
    let (k, zeta) = cyclotomic_field(6);
    let d = ProjElem::new(&Mat2::diag(k.one(), zeta)).unwrap();
    assert_eq!(d.order(120), Some(6));
    let inf = ProjElem::new(&Mat2::diag(q.one(), q.from_i64(2))).unwrap();
    assert_eq!(inf.order(500), None);
}

#[test]
fn eigen_examples() {
    let q = Field::rational();
    let (a, d) = (q.from_i64(3), q.from_i64(-2));
    match eigenvectors(&Mat2::diag(a.clone(), d.clone())) {
        EigenReport::Split { pairs } => {
            assert_eq!(
                pairs,
                vec![
                    (a, ProjPoint::infinity(&q)),
                    (d, ProjPoint::affine(&q.zero()))
                ]
            );
        }
        other => panic!("{other:?}"),
    }
    let j = Mat2::from_i64(&q, [[4, 7], [0, 4]]);
    assert_eq!(
        eigenvectors(&j),
        EigenReport::Split {
            pairs: vec![(q.from_i64(4), ProjPoint::infinity(&q))]
        }
    );
    let rot = Mat2::from_i64(&q, [[0, 1], [-1, 0]]);
    assert!(matches!(
        eigenvectors(&rot),
        EigenReport::ExtensionRequired { .. }
    ));
    let (k, _) = gaussian();
    let rot = Mat2::from_i64(&k, [[0, 1], [-1, 0]]);
    assert_eq!(eigenvectors(&rot).eigenlines().len(), 2);
    assert!(matches!(
        eigenvectors(&Mat2::scalar(&q.from_i64(3))),
        EigenReport::Scalar { .. }
    ));
}

#[test]
fn moebius_examples() {
    let q = Field::rational();
    let p = ProjPoint::affine(&q.from_i64(7));
    assert_eq!(ProjElem::identity(&q).apply(&p), p);
    // [[a, b], [0, a]] is the translation t ↦ t + b/a
    let f9 = finite_field(3, 2).unwrap();
    let a = f9.generator().unwrap();
    let b = f9.one();
    let g = ProjElem::new(&Mat2::new(a.clone(), b.clone(), f9.zero(), a.clone())).unwrap();
    let t = &f9.from_i64(2) * &a;
    let image = g.apply(&ProjPoint::affine(&t));
    assert_eq!(image, ProjPoint::affine(&(&t + &(&b * &a.inv().unwrap()))));
    // [[0, 1], [1, 0]] is t ↦ 1/t
    let swap = ProjElem::new(&Mat2::from_i64(&q, [[0, 1], [1, 0]])).unwrap();
    let t = q.from_i64(5);
    assert_eq!(
        swap.apply(&ProjPoint::affine(&t)),
        ProjPoint::new(q.one(), t).unwrap()
    );
    assert_eq!(swap.apply(&ProjPoint::infinity(&q)), ProjPoint::affine(&q.zero()));
}

#[test]
fn mixed_fields_are_rejected() {
    let q = Field::rational();
    let f = f5();
    let g = ProjElem::identity(&q);
    let h = ProjElem::identity(&f);
    assert!(g.try_mul(&h).is_err());
    assert!(g.try_apply(&ProjPoint::infinity(&f)).is_err());
    assert!(ProjPoint::new(q.one(), f.one()).is_err());
}

fn test_fields() -> Vec<Field> {
    vec![
        Field::rational(),
        f5(),
        finite_field(3, 2).unwrap(),
        cyclotomic_field(3).0,
        finite_field(2, 3).unwrap(),
    ]
}

fn elem(f: &Field, v: i64, w: i64) -> FieldElement {
    match f.generator() {
        Some(z) => &f.from_i64(v) + &(&z * &f.from_i64(w)),
        None => f.from_i64(v),
    }
}

fn mat(f: &Field, v: &[(i64, i64)]) -> Mat2 {
    Mat2::new(
        elem(f, v[0].0, v[0].1),
        elem(f, v[1].0, v[1].1),
        elem(f, v[2].0, v[2].1),
        elem(f, v[3].0, v[3].1),
    )
}

fn entries() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-6i64..6, -3i64..3), 4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normalization_is_scale_invariant(m in entries(), l in (1i64..9, -2i64..2), which in 0usize..5) {
        let f = &test_fields()[which];
        let m = mat(f, &m);
        let lam = elem(f, l.0, l.1);
        prop_assume!(m.is_invertible() && !lam.is_zero());
        prop_assert_eq!(ProjElem::new(&m.scale(&lam)).unwrap(), ProjElem::new(&m).unwrap());
    }

    #[test]
    fn det_is_multiplicative_and_commutators_are_traceless(a in entries(), b in entries(), which in 0usize..5) {
        let f = &test_fields()[which];
        let (a, b) = (mat(f, &a), mat(f, &b));
        prop_assert_eq!(a.mul(&b).det(), &a.det() * &b.det());
        prop_assert!(a.commutator(&b).trace().is_zero());
    }

    #[test]
    fn eigenpairs_are_exact(a in entries(), which in 0usize..5) {
        let f = &test_fields()[which];
        let m = mat(f, &a);
        if let EigenReport::Split { pairs } = eigenvectors(&m) {
            for (l, v) in pairs {
                let (x, y) = m.apply(v.x(), v.y());
                prop_assert_eq!(x, &l * v.x());
                prop_assert_eq!(y, &l * v.y());
            }
        }
    }

    #[test]
    fn moebius_is_an_action(a in entries(), b in entries(), t in (-5i64..5, -2i64..2), which in 0usize..5) {
        let f = &test_fields()[which];
        let (a, b) = (mat(f, &a), mat(f, &b));
        prop_assume!(a.is_invertible() && b.is_invertible());
        let (g, h) = (ProjElem::new(&a).unwrap(), ProjElem::new(&b).unwrap());
        let p = ProjPoint::affine(&elem(f, t.0, t.1));
        prop_assert_eq!(g.mul(&h).apply(&p), g.apply(&h.apply(&p)));
    }

    #[test]
    fn order_matches_power_iteration(a in entries(), which in 1usize..3) {
        let f = &test_fields()[which];
        let m = mat(f, &a);
        prop_assume!(m.is_invertible());
        let g = ProjElem::new(&m).unwrap();
        let n = g.order(120).expect("finite fields give finite orders");
        prop_assert!(g.pow(n).is_identity());
        for k in 1..n {
            prop_assert!(!g.pow(k).is_identity());
        }
    }
}
