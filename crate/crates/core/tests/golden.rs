//! Closure orders, labels, relations and orbit sizes of the hand-built
//! configurations.

mod common;

use common::*;
use skewlines::config::LineId;
use skewlines::exactfield::{cyclotomic_field, finite_field, Field};
use skewlines::groupoid::{
    classify, configuration_group, eigratio_check, generator, GroupLabel, DEFAULT_BUDGET,
};
use skewlines::linalg2::{Mat2, ProjElem, ProjPoint};
use skewlines::orbits::{
    generic_seed, is_stable, orbit_full, orbit_geometric, orbit_on_line, point_on_line, OrbitReport,
    P3Point,
};

const ORBIT_BUDGET: usize = 100_000;

fn cls(m: &Mat2) -> ProjElem {
    ProjElem::new(m).unwrap()
}

fn orbit(cfg: &skewlines::config::LineConfig, seed: &P3Point) -> OrbitReport {
    let g = configuration_group(cfg, DEFAULT_BUDGET);
    let r = orbit_full(cfg, seed, ORBIT_BUDGET).unwrap().with_group(&g).unwrap();
    assert!(r.per_line_sizes.values().all(|&s| s == r.carrier_size()));
    r
}

fn on_infinity(cfg: &skewlines::config::LineConfig, v: &ProjPoint) -> P3Point {
    point_on_line(cfg, LineId::Infinity, v).unwrap()
}

#[test]
fn icosahedral() {
    let cfg = a5();
    let (k, _, phi) = a5_field();
    assert_eq!(&phi * &phi, &phi + &k.one());
    assert!(!cfg.transversal_exists());

    let g = configuration_group(&cfg, DEFAULT_BUDGET);
    assert_eq!(g.order(), 60);
    let c = classify(&g).unwrap();
    assert_eq!(c.label, GroupLabel::A5);
    assert_eq!(c.order_census, [(1, 1), (2, 15), (3, 20), (5, 24)].into_iter().collect());

    let r = cls(&cfg.matrices()[1]);
    let s = cls(&cfg.matrices()[2]);
    assert!(g.contains(&r) && g.contains(&s));
    assert!(r.pow(3).is_identity());
    assert!(s.pow(5).is_identity());
    assert!(r.mul(&s).pow(2).is_identity());

    let special = P3Point::parse(&k, "[0:0:0:1]").unwrap();
    let o = orbit(&cfg, &special);
    // five lines, 30 points on each
    assert_eq!(o.carrier_size(), 30);
    assert_eq!(o.total_size, 150);
    assert_eq!(o.stabilizer_order, Some(2));

    let v = generic_seed(&g).unwrap();
    let o = orbit(&cfg, &on_infinity(&cfg, &v));
    assert_eq!(o.total_size, 300);
    assert_eq!(o.stabilizer_order, Some(1));
}

#[test]
fn octahedral() {
    let cfg = s4_gaussian();
    let k = cfg.field().clone();
    let i = cyclotomic_field(4).1;
    let [m1, m2, m3] = [&cfg.matrices()[0], &cfg.matrices()[1], &cfg.matrices()[2]];
    assert!(m1.is_identity());
    assert_eq!(m2.commutator(m3).det(), k.from_i64(2));

    let g = configuration_group(&cfg, DEFAULT_BUDGET);
    assert_eq!(g.order(), 24);
    assert_eq!(classify(&g).unwrap().label, GroupLabel::S4);

    let (two, zero, one, three) = (LineId::M(2), LineId::Zero, LineId::M(1), LineId::M(3));
    let r = generator(&cfg, two, zero, one).unwrap();
    let s = r.mul(&generator(&cfg, three, zero, one).unwrap());
    let one_k = k.one();
    let r_shown = Mat2::new(&i - &one_k, &one_k + &i, &i - &one_k, -&(&one_k + &i));
    assert_eq!(r, cls(&r_shown));
    assert_eq!(s, cls(&Mat2::new(i.clone(), one_k.clone(), -&one_k, -&i)));
    assert!(r.pow(3).is_identity());
    assert!(s.pow(2).is_identity());
    assert!(r.mul(&s).pow(4).is_identity());
    assert!(!r.is_identity() && !s.is_identity() && !r.mul(&s).pow(2).is_identity());
}

#[test]
fn octahedral_orbits() {
    let (k, _, i, sqrt3) = q12();
    let cfg = s4_over(&k, &i);
    let g = configuration_group(&cfg, DEFAULT_BUDGET);
    assert_eq!(g.order(), 24);

    let v = generic_seed(&g).unwrap();
    assert_eq!(orbit(&cfg, &on_infinity(&cfg, &v)).total_size, 120);

    // [0:0:−1:(1−i)(1+√3)/2]
    let w = &(&(&k.one() - &i) * &(&k.one() + &sqrt3)) * &half(&k);
    let mid = P3Point::new([k.zero(), k.zero(), k.from_i64(-1), w]).unwrap();
    let o = orbit(&cfg, &mid);
    assert_eq!(o.total_size, 40);
    assert_eq!(o.stabilizer_order, Some(3));

    let o = orbit(&cfg, &P3Point::parse(&k, "[0:0:0:1]").unwrap());
    assert_eq!(o.total_size, 30);
    assert_eq!(o.stabilizer_order, Some(4));
}

#[test]
fn tetrahedral() {
    let (k, z, i, _) = q12();
    let eps = z.pow(2);
    let a = k.one();
    let cfg = a4(&a);
    assert_eq!(cfg.matrices()[1].commutator(&cfg.matrices()[2]).det(), k.from_i64(2));

    let g = configuration_group(&cfg, DEFAULT_BUDGET);
    assert_eq!(g.order(), 12);
    assert_eq!(classify(&g).unwrap().label, GroupLabel::A4);

    let ei = eps.inv().unwrap();
    let r = cls(&cfg.matrices()[1]);
    let s = cls(&Mat2::new(
        eps.clone(),
        &a * &ei,
        (&a * &eps).inv().unwrap(),
        ei.pow(2),
    ));
    assert!(g.contains(&r) && g.contains(&s));
    assert!(s.pow(2).is_identity());
    assert!(r.pow(3).is_identity());
    assert!(s.mul(&r).pow(3).is_identity());

    let v = generic_seed(&g).unwrap();
    assert_eq!(orbit(&cfg, &on_infinity(&cfg, &v)).total_size, 60);

    let mid = P3Point::new([k.zero(), k.zero(), k.from_i64(-1), &i * &a]).unwrap();
    assert_eq!(orbit(&cfg, &mid).total_size, 30);

    let special = P3Point::parse(&k, "[0:0:0:1]").unwrap();
    let o = orbit(&cfg, &special);
    assert_eq!(o.total_size, 20);
    // the four values are listed in the coordinate w/z of [0:0:z:w]
    let mut expected = vec![
        P3Point::parse(&k, "[0:0:0:1]").unwrap(),
        P3Point::parse(&k, "[0:0:1:0]").unwrap(),
        P3Point::new([k.zero(), k.zero(), k.one(), (&eps * &a).inv().unwrap()]).unwrap(),
        P3Point::new([k.zero(), k.zero(), k.one(), -&(&eps * &a.inv().unwrap())]).unwrap(),
    ];
    expected.sort();
    assert_eq!(o.points[&LineId::Infinity], expected);
}

#[test]
fn jordan_blocks_give_elementary_abelian_groups() {
    for p in [3, 5] {
        let cfg = jordan_case(p);
        let g = configuration_group(&cfg, DEFAULT_BUDGET);
        assert_eq!(g.order() as u64, p * p);
        assert_eq!(
            classify(&g).unwrap().label,
            GroupLabel::ElementaryAbelian { p: p as _, m: 2 }
        );
    }
}

/// `a ∈ F_p` with `a²` of order `p − 1` does not exist for `p = 5`, so `a` is
/// taken from `F₂₅`. Then `[M₃ − I]` dilates by `−a`, of order 8, and the
/// translations are stable under `t ↦ at`, so they fill all of `F₂₅`.
#[test]
fn affine_over_f25() {
    let f = finite_field(5, 2).unwrap();
    let a = f.from_i64(2).sqrt().unwrap().unwrap();
    assert_eq!((&a * &a).mult_order(100), Some(4));
    assert_eq!((-&a).mult_order(100), Some(8));
    let cfg = affine(&f, &a);
    let g = configuration_group(&cfg, DEFAULT_BUDGET);
    let c = classify(&g).unwrap();
    assert_eq!(c.fixed_point, Some(ProjPoint::infinity(&f)));
    assert_eq!(g.order(), 200);
    assert_eq!(c.label, GroupLabel::Affine { unipotent: 25, quotient: 8 });
}

/// With `a = 2 ∈ F₅` the dilations are by 4 and by `(a − 1)/(a⁻¹ − 1) = 3`,
/// of order 4, and the translations are `F₅`.
#[test]
fn affine_over_f5() {
    let f = finite_field(5, 1).unwrap();
    let cfg = affine(&f, &f.from_i64(2));
    let g = configuration_group(&cfg, DEFAULT_BUDGET);
    assert_eq!(g.order(), 20);
    assert_eq!(classify(&g).unwrap().label, GroupLabel::Affine { unipotent: 5, quotient: 4 });
}

/// Each affine map with a nontrivial dilation fixes a point of the base
/// field, so generic points only exist over a larger field.
#[test]
fn affine_orbits() {
    let cases = [(5, 1, 2, 2), (3, 2, -1, 4), (5, 2, 2, 4)];
    for (p, base_deg, a2, deg) in cases {
        let f = finite_field(p, deg).unwrap();
        let a = if base_deg == 1 {
            f.from_i64(a2)
        } else {
            f.from_i64(a2).sqrt().unwrap().unwrap()
        };
        let cfg = affine(&f, &a);
        let g = configuration_group(&cfg, DEFAULT_BUDGET);
        let c = classify(&g).unwrap();
        let GroupLabel::Affine { unipotent, .. } = c.label else {
            panic!("{}", c.label)
        };

        // t = ∞ is fixed
        let fixed = P3Point::parse(&f, "[0:0:1:0]").unwrap();
        assert_eq!(orbit(&cfg, &fixed).carrier_size(), 1);
        assert_eq!(orbit_on_line(&g, &ProjPoint::infinity(&f)).unwrap(), (1, g.order()));

        // t = 0 runs through the translations
        let o = orbit(&cfg, &P3Point::parse(&f, "[0:0:0:1]").unwrap());
        assert_eq!(o.carrier_size(), unipotent);
        assert_eq!(o.carrier_size() % p as usize, 0);

        let v = generic_seed(&g).unwrap();
        assert_eq!(orbit(&cfg, &on_infinity(&cfg, &v)).carrier_size(), g.order());
    }
}

#[test]
fn standard_construction_orders() {
    for n in 3..=8u64 {
        let g = configuration_group(&standard(n), DEFAULT_BUDGET);
        let expected = if n % 2 == 0 { n } else { 2 * n };
        assert_eq!(g.order() as u64, expected, "n = {n}");
        assert_eq!(
            classify(&g).unwrap().label,
            GroupLabel::Cyclic { n: expected as usize }
        );
    }
}

/// For `n = 2` every matrix is `±I`, so every generator is scalar.
#[test]
fn standard_construction_n2_is_trivial() {
    let cfg = standard(2);
    assert!(cfg.matrices().iter().all(|m| m.is_scalar()));
    assert_eq!(configuration_group(&cfg, DEFAULT_BUDGET).order(), 1);
}

#[test]
fn scaled_c3_with_s_minus_one() {
    let cfg = c3_scaled(2);
    let k = cfg.field();
    // t = −1/2
    let t = &cfg.matrices()[3].entries()[0] * &cfg.matrices()[0].entries()[0].inv().unwrap();
    assert_eq!(t, k.from_i64(-1) * k.from_i64(2).inv().unwrap());
    let g = configuration_group(&cfg, DEFAULT_BUDGET);
    assert_eq!(g.order(), 6);
    assert!(!eigratio_check(&cfg, 120).infinite);
}

/// The lines of `C̃₃` alone give `[M_i − M_k]` with ratio `−ε^{i+k}`, so
/// `−ε` of order 6 is always present; the mixed triples add `ε^{2j} s^{±1}`.
/// The group is `⟨−ε, s⟩`, of order `lcm(6, ord(s))`.
#[test]
fn scaled_c3_orders() {
    for n in [2u64, 4, 5, 6] {
        let g = configuration_group(&c3_scaled(n), DEFAULT_BUDGET);
        assert_eq!(g.order() as u64, lcm(6, n), "ord(s) = {n}");
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    (1..).map(|k| a * k).find(|m| m % b == 0).unwrap()
}

#[test]
fn infinite_group_is_detected() {
    let f = Field::rational();
    let cfg = skewlines::config::LineConfig::standard(
        &f,
        vec![Mat2::identity(&f), Mat2::diag(f.from_i64(2), f.from_i64(3))],
    )
    .unwrap();
    assert!(eigratio_check(&cfg, 120).infinite);
    assert!(configuration_group(&cfg, DEFAULT_BUDGET).budget_hit());
}

#[test]
fn golden_orbits_match_the_geometric_oracle() {
    for (name, cfg) in corpus() {
        let g = configuration_group(&cfg, DEFAULT_BUDGET);
        let f = cfg.field().clone();
        let v = generic_seed(&g).unwrap_or_else(|_| ProjPoint::affine(&f.one()));
        for seed in [
            P3Point::parse(&f, "[0:0:0:1]").unwrap(),
            on_infinity(&cfg, &v),
            point_on_line(&cfg, LineId::M(1), &ProjPoint::affine(&f.one())).unwrap(),
        ] {
            let a = orbit_full(&cfg, &seed, ORBIT_BUDGET).unwrap();
            let b = orbit_geometric(&cfg, &seed, ORBIT_BUDGET).unwrap();
            assert_eq!(a.points, b.points, "{name}, seed {seed}");
            assert!(is_stable(&cfg, &a).unwrap(), "{name}");
            let a = a.with_group(&g).unwrap();
            assert!(a.per_line_sizes.values().all(|&s| s == a.carrier_size()), "{name}");
        }
    }
}
