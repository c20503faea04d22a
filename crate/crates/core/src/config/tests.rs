use proptest::prelude::*;

use super::*;
use crate::exactfield::{cyclotomic_field, finite_field, FieldElement};
use crate::linalg2::ProjElem;

fn q() -> Field {
    Field::rational()
}

fn diag(f: &Field, a: i64, d: i64) -> Mat2 {
    Mat2::diag(f.from_i64(a), f.from_i64(d))
}

/// The two Gaussian matrices shared by the A₅ and S₄ configurations.
fn s4_pair() -> (Field, Mat2, Mat2) {
    let (k, i) = cyclotomic_field(4);
    let one = k.one();
    let half = k.from_i64(2).inv().unwrap();
    let m2 = Mat2::new(&one + &i, &one + &i, &i - &one, &one - &i).scale(&half);
    let m3 = Mat2::from_i64(&k, [[0, 1], [-1, 0]]);
    (k, m2, m3)
}

#[test]
fn validation_examples() {
    let f = q();
    let ok = LineConfig::standard(&f, vec![Mat2::identity(&f), diag(&f, 2, 3)]);
    assert!(ok.is_ok());

    let twice = LineConfig::unchecked(
        &f,
        true,
        true,
        vec![Mat2::identity(&f), diag(&f, 2, 3), diag(&f, 2, 3)],
    )
    .unwrap();
    let r = twice.validate();
    assert!(!r.valid);
    assert_eq!(r.meeting_pairs, vec![(2, 3)]);

    // a₂ = a₃ with d₂ ≠ d₃: the difference is singular
    let shared = LineConfig::unchecked(
        &f,
        true,
        true,
        vec![Mat2::identity(&f), diag(&f, 2, 3), diag(&f, 2, 5)],
    )
    .unwrap();
    assert_eq!(shared.validate().meeting_pairs, vec![(2, 3)]);

    let one_eig = LineConfig::unchecked(&f, true, true, vec![Mat2::identity(&f), diag(&f, 1, 3)])
        .unwrap()
        .validate();
    assert_eq!(one_eig.meets_identity, vec![2]);
    assert_eq!(one_eig.meeting_pairs, vec![(1, 2)]);

    let singular = LineConfig::unchecked(&f, true, true, vec![diag(&f, 0, 3)])
        .unwrap()
        .validate();
    assert_eq!(singular.meets_zero, vec![1]);
    // without L₀ a singular matrix is harmless
    assert!(LineConfig::new(&f, false, true, vec![diag(&f, 0, 3), diag(&f, 2, 5)]).is_ok());
}

#[test]
fn json_round_trip() {
    let (k, m2, m3) = s4_pair();
    let cfg = LineConfig::standard(&k, vec![Mat2::identity(&k), m2, m3]).unwrap();
    let json = cfg.to_json();
    let back = LineConfig::from_json(&json).unwrap();
    assert_eq!(back, cfg);
    assert_eq!(back.to_json(), json);

    let text = r#"{"field":{"kind":"prime","p":7},
                   "lines":["infinity","zero","identity",[["2","0"],["0","3"]]]}"#;
    let cfg = LineConfig::from_json(text).unwrap();
    assert_eq!(cfg.lines(), vec![LineId::Infinity, LineId::Zero, LineId::M(1), LineId::M(2)]);
    assert!(cfg.matrices()[0].is_identity());

    let dup = r#"{"field":{"kind":"rational"},"lines":["zero","zero"]}"#;
    assert!(matches!(LineConfig::from_json(dup), Err(ConfigError::Parse(_))));
    let bad = r#"{"field":{"kind":"rational"},"lines":["identity","identity"]}"#;
    assert!(matches!(LineConfig::from_json(bad), Err(ConfigError::Invalid(_))));
}

#[test]
fn line_ids_parse_and_print() {
    for id in [LineId::Infinity, LineId::Zero, LineId::M(3)] {
        assert_eq!(id.to_string().parse::<LineId>().unwrap(), id);
    }
    assert!("0x".parse::<LineId>().is_err());
}

#[test]
fn transversal_examples() {
    let f = q();
    let diag_cfg =
        LineConfig::standard(&f, vec![Mat2::identity(&f), diag(&f, 2, 3), diag(&f, 5, 7)]).unwrap();
    let t = diag_cfg.transversal_compute();
    assert!(t.exists);
    assert_eq!(t.method, TransversalMethod::SimultaneousEigen);
    assert_eq!(
        t.witnesses,
        vec![ProjPoint::infinity(&f), ProjPoint::affine(&f.zero())]
    );

    let jordan = LineConfig::standard(
        &f,
        vec![Mat2::identity(&f), Mat2::from_i64(&f, [[2, 1], [0, 2]])],
    )
    .unwrap();
    let t = jordan.transversal_compute();
    assert_eq!(t.witnesses, vec![ProjPoint::infinity(&f)]);

    let (k, m2, m3) = s4_pair();
    assert_eq!(m2.commutator(&m3).det(), k.from_i64(2));
    let s4 = LineConfig::standard(&k, vec![Mat2::identity(&k), m2, m3]).unwrap();
    let t = s4.transversal_compute();
    assert!(!t.exists);
    assert!(t.witnesses.is_empty());
    assert!(!s4.transversal_exists());

    // the rotation has no eigenvalues over Q, yet commuting lines share them
    let rot = Mat2::from_i64(&f, [[0, 1], [-1, 0]]);
    let cfg = LineConfig::standard(&f, vec![Mat2::identity(&f), rot.clone(), rot.scale(&f.from_i64(2))])
        .unwrap();
    let t = cfg.transversal_compute();
    assert!(t.exists && t.witnesses.is_empty());
    assert_eq!(t.method, TransversalMethod::ExtensionRequired);

    let pencil = LineConfig::standard(&f, vec![Mat2::identity(&f), Mat2::scalar(&f.from_i64(3))])
        .unwrap();
    assert!(pencil.transversal_compute().infinitely_many);
}

#[test]
fn nilpotent_commutator_gives_the_kernel() {
    let f = q();
    // upper triangular, non-commuting: [M₂, M₃] is nilpotent and its kernel is e₁
    let m2 = Mat2::from_i64(&f, [[2, 1], [0, 3]]);
    let m3 = Mat2::from_i64(&f, [[5, 0], [0, 7]]);
    let cfg = LineConfig::standard(&f, vec![Mat2::identity(&f), m2, m3]).unwrap();
    let t = cfg.transversal_compute();
    assert_eq!(t.method, TransversalMethod::CommutatorKernel);
    assert_eq!(t.witnesses, vec![ProjPoint::infinity(&f)]);
}

#[test]
fn abelian_examples() {
    let f = q();
    let d = LineConfig::standard(&f, vec![Mat2::identity(&f), diag(&f, 2, 3), diag(&f, 5, 7)]).unwrap();
    let r = d.predict_abelian();
    assert!(r.abelian);
    assert!(r.pairs.iter().any(|p| p.relation == PairRelation::SimultaneouslyDiagonalizable));

    let f9 = finite_field(3, 2).unwrap();
    let a = f9.generator().unwrap();
    let m2 = Mat2::new(a.clone(), f9.one(), f9.zero(), a);
    let j = LineConfig::standard(&f9, vec![Mat2::identity(&f9), m2.clone(), m2.sub(&Mat2::identity(&f9))])
        .unwrap();
    let r = j.predict_abelian();
    assert!(r.abelian);
    assert_eq!(r.pairs.last().unwrap().relation, PairRelation::SharedEigenspace);

    let (k, m2, m3) = s4_pair();
    let s4 = LineConfig::standard(&k, vec![Mat2::identity(&k), m2, m3]).unwrap();
    assert!(!s4.predict_abelian().abelian);
}

#[test]
fn anticommuting_pairs_are_not_abelian() {
    let (k, i) = cyclotomic_field(4);
    let a = Mat2::diag(-&i, i.clone());
    let b = Mat2::new(k.zero(), i.clone(), i.clone(), k.zero());
    let cfg = LineConfig::standard(&k, vec![Mat2::identity(&k), a.clone(), b.clone()]).unwrap();
    let r = cfg.predict_abelian();
    assert_eq!(r.pairs[2].relation, PairRelation::Anticommuting);
    assert!(r.pairs[2].relation.classes_commute());
    assert!(!r.abelian);
    // [M₂ − I] and [M₃] already fail to commute
    let g = ProjElem::new(&a.sub(&Mat2::identity(&k))).unwrap();
    assert!(!g.commutes_with(&ProjElem::new(&b).unwrap()));
}

fn is_eigen(m: &Mat2, v: &ProjPoint) -> bool {
    is_eigenline(m, v)
}

fn elem(f: &Field, v: (i64, i64)) -> FieldElement {
    match f.generator() {
        Some(z) => &f.from_i64(v.0) + &(&z * &f.from_i64(v.1)),
        None => f.from_i64(v.0),
    }
}

fn fields() -> Vec<Field> {
    vec![q(), finite_field(5, 1).unwrap(), finite_field(3, 2).unwrap(), cyclotomic_field(3).0]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// Lemma: a transversal exists exactly when every commutator of the
    /// reduced matrices is singular; witnesses are common eigenlines.
    #[test]
    fn transversals_match_commutators(
        e in prop::collection::vec((-4i64..5, -2i64..3), 8),
        which in 0usize..4,
    ) {
        let f = &fields()[which];
        let m2 = Mat2::new(elem(f, e[0]), elem(f, e[1]), elem(f, e[2]), elem(f, e[3]));
        let m3 = Mat2::new(elem(f, e[4]), elem(f, e[5]), elem(f, e[6]), elem(f, e[7]));
        let cfg = LineConfig::standard(f, vec![Mat2::identity(f), m2.clone(), m3.clone()]);
        prop_assume!(cfg.is_ok());
        let cfg = cfg.unwrap();
        let t = cfg.transversal_compute();
        prop_assert_eq!(t.exists, m2.commutator(&m3).det().is_zero());
        for v in &t.witnesses {
            prop_assert!(is_eigen(&m2, v) && is_eigen(&m3, v));
        }
    }

    #[test]
    fn classes_are_scale_invariant(e in prop::collection::vec((-4i64..5, -2i64..3), 5), which in 0usize..4) {
        let f = &fields()[which];
        let m = Mat2::new(elem(f, e[0]), elem(f, e[1]), elem(f, e[2]), elem(f, e[3]));
        let l = elem(f, e[4]);
        prop_assume!(m.is_invertible() && !l.is_zero());
        prop_assert_eq!(ProjElem::new(&m.scale(&l)).unwrap(), ProjElem::new(&m).unwrap());
    }
}
