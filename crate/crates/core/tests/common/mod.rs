//! Configurations shared by the integration tests, built by hand from their
//! matrices.

#![allow(dead_code)]

use skewlines::config::LineConfig;
use skewlines::exactfield::{cyclotomic_field, finite_field, Field, FieldElement};
use skewlines::linalg2::Mat2;

pub fn half(k: &Field) -> FieldElement {
    k.from_i64(2).inv().unwrap()
}

pub fn std5(k: &Field, m2: Mat2, m3: Mat2) -> LineConfig {
    LineConfig::standard(k, vec![Mat2::identity(k), m2, m3]).unwrap()
}

/// `i` and `φ` inside `Q(ζ₂₀)`.
pub fn a5_field() -> (Field, FieldElement, FieldElement) {
    let (k, z) = cyclotomic_field(20);
    let i = z.pow(5);
    let phi = &(&k.one() + &z.pow(4)) + &z.pow(16);
    (k, i, phi)
}

pub fn a5() -> LineConfig {
    let (k, i, phi) = a5_field();
    let one = k.one();
    let pinv = phi.inv().unwrap();
    let m2 = Mat2::new(&one + &i, &one + &i, &i - &one, &one - &i).scale(&half(&k));
    let m3 = Mat2::new(
        &phi + &(&pinv * &i),
        one.clone(),
        -&one,
        &phi - &(&pinv * &i),
    )
    .scale(&half(&k));
    std5(&k, m2, m3)
}

/// The octahedral configuration over a field containing `i`.
pub fn s4_over(k: &Field, i: &FieldElement) -> LineConfig {
    let one = k.one();
    let m2 = Mat2::new(&one + i, &one + i, i - &one, &one - i).scale(&half(k));
    let m3 = Mat2::from_i64(k, [[0, 1], [-1, 0]]);
    std5(k, m2, m3)
}

pub fn s4_gaussian() -> LineConfig {
    let (k, i) = cyclotomic_field(4);
    s4_over(&k, &i)
}

/// `i` and `√3` inside `Q(ζ₁₂)`.
pub fn q12() -> (Field, FieldElement, FieldElement, FieldElement) {
    let (k, z) = cyclotomic_field(12);
    let i = z.pow(3);
    let sqrt3 = &z + &z.pow(11);
    (k, z, i, sqrt3)
}

/// The tetrahedral configuration over `Q(ζ₁₂)` with `ε = ζ₁₂²`.
pub fn a4(a: &FieldElement) -> LineConfig {
    let (k, z, _, _) = q12();
    let eps = z.pow(2);
    let ei = eps.inv().unwrap();
    let m2 = Mat2::new(eps.clone(), a.clone(), k.zero(), ei.clone());
    let m3 = Mat2::new(eps, k.zero(), a.inv().unwrap(), ei);
    std5(&k, m2, m3)
}

/// `M₂ = −I + E₁₂`, `M₃ = diag(a, a⁻¹)`.
pub fn affine(k: &Field, a: &FieldElement) -> LineConfig {
    let m2 = Mat2::from_i64(k, [[-1, 1], [0, -1]]);
    let m3 = Mat2::diag(a.clone(), a.inv().unwrap());
    std5(k, m2, m3)
}

/// `{0, ∞, I, [[a, 1], [0, a]]}` over `F_{p²}` with `a` its generator.
pub fn jordan_case(p: u64) -> LineConfig {
    let f = finite_field(p, 2).unwrap();
    let a = f.generator().unwrap();
    let m2 = Mat2::new(a.clone(), f.one(), f.zero(), a);
    LineConfig::standard(&f, vec![Mat2::identity(&f), m2]).unwrap()
}

/// `{L₀, L∞} ∪ {diag(εʲ, ε⁻ʲ) : 0 ≤ j < n}` with `ε` a primitive `n`-th root.
pub fn standard(n: u64) -> LineConfig {
    let (k, z) = cyclotomic_field(n);
    let m = Mat2::diag(z.clone(), z.inv().unwrap());
    LineConfig::standard(&k, (0..n).map(|j| m.pow(j)).collect()).unwrap()
}

/// `{L₀, L∞} ∪ C₃ ∪ tC₃` for an `n`-th root of unity `s`, working in
/// `Q(ζ_m)` with `m = lcm(3, n)`.
pub fn c3_scaled(n: u64) -> LineConfig {
    let m = num_lcm(3, n);
    let (k, z) = cyclotomic_field(m);
    let eps = z.pow(m / 3);
    let s = z.pow(m / n);
    let one = k.one();
    let t = (&(&eps * &(&one + &s)) + &s).checked_div(&(&one - &s)).unwrap();
    let c = Mat2::diag(eps.clone(), eps.inv().unwrap());
    let mut mats: Vec<Mat2> = (0..3).map(|j| c.pow(j)).collect();
    mats.extend((0..3).map(|j| c.pow(j).scale(&t)));
    LineConfig::standard(&k, mats).unwrap()
}

fn num_lcm(a: u64, b: u64) -> u64 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

/// Every hand-built configuration used by the integration tests.
pub fn corpus() -> Vec<(String, LineConfig)> {
    let (k12, _, i12, _) = q12();
    let f5 = finite_field(5, 1).unwrap();
    let f9 = finite_field(3, 2).unwrap();
    let f25 = finite_field(5, 2).unwrap();
    let sqrt2 = f25.from_i64(2).sqrt().unwrap().unwrap();
    let mut out = vec![
        ("A5".to_string(), a5()),
        ("S4".to_string(), s4_gaussian()),
        ("S4 over Q(z12)".to_string(), s4_over(&k12, &i12)),
        ("A4".to_string(), a4(&k12.one())),
        ("jordan F9".to_string(), jordan_case(3)),
        ("jordan F25".to_string(), jordan_case(5)),
        ("affine F9".to_string(), affine(&f9, &f9.generator().unwrap())),
        ("affine F25".to_string(), affine(&f25, &sqrt2)),
        ("affine F5".to_string(), affine(&f5, &f5.from_i64(2))),
        ("C3 u tC3, s = -1".to_string(), c3_scaled(2)),
    ];
    for n in 2..=6 {
        out.push((format!("standard {n}"), standard(n)));
    }
    out
}
