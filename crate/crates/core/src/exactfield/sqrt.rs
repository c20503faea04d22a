//! Square roots in finite fields and number fields.

use num_bigint::BigUint;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::numeric::{complex_roots, rational_approx, solve_complex};
use super::scalar::{derivative, eval, is_prime_u64, kernel, ModP, ScalarRing};
use super::{rational_sqrt, Coef, FieldElement, FieldError, PrimeField};

pub(super) fn sqrt(a: &FieldElement) -> Result<Option<FieldElement>, FieldError> {
    if a.is_zero() {
        return Ok(Some(a.clone()));
    }
    match a.field.prime() {
        PrimeField::Modular(p) => Ok(finite_sqrt(a, p)),
        PrimeField::Rational => {
            if a.field.degree() == 1 {
                let Coef::Q(q) = &a.c[0] else { unreachable!() };
                return Ok(rational_sqrt(q).map(|r| a.field.element(vec![Coef::Q(r)])));
            }
            if certified_non_square(a) {
                return Ok(None);
            }
            if let Some(x) = numeric_sqrt(a) {
                return Ok(Some(x));
            }
            Err(FieldError::UnsupportedField(format!(
                "square root of {a} could not be decided"
            )))
        }
    }
}

fn finite_sqrt(a: &FieldElement, p: u64) -> Option<FieldElement> {
    let field = &a.field;
    if field.degree() == 1 {
        let Coef::P(v) = a.c[0] else { unreachable!() };
        return ModP(p).sqrt(v).map(|r| field.element(vec![Coef::P(r)]));
    }
    let q = field.order().unwrap();
    if p == 2 {
        // squaring is a bijection; its inverse is x ↦ x^(q/2)
        return Some(a.pow_big(&(q >> 1)));
    }
    let one = BigUint::one();
    let half = (&q - &one) >> 1;
    if !a.pow_big(&half).is_one() {
        return None;
    }
    // Tonelli–Shanks in the multiplicative group of order q − 1
    let mut odd = &q - &one;
    let mut s = 0u32;
    while odd.is_even() {
        odd >>= 1;
        s += 1;
    }
    let minus_one = -field.one();
    let nonresidue = (1..)
        .map_while(|i| field.element_by_index(i))
        .find(|z| a.field.same(z.field()) && z.pow_big(&half) == minus_one)?;
    let mut m = s;
    let mut c = nonresidue.pow_big(&odd);
    let mut t = a.pow_big(&odd);
    let mut r = a.pow_big(&((&odd + &one) >> 1));
    while !t.is_one() {
        let mut i = 0u32;
        let mut t2 = t.clone();
        while !t2.is_one() {
            t2 = &t2 * &t2;
            i += 1;
        }
        let mut b = c.clone();
        for _ in 0..(m - i - 1) {
            b = &b * &b;
        }
        m = i;
        c = &b * &b;
        t = &t * &c;
        r = &r * &b;
    }
    Some(r)
}

fn rational_coefs(a: &FieldElement) -> Vec<BigRational> {
    prime_rationals(&a.c)
}

fn prime_rationals(c: &[Coef]) -> Vec<BigRational> {
    c.iter()
        .map(|c| match c {
            Coef::Q(q) => q.clone(),
            Coef::P(_) => unreachable!(),
        })
        .collect()
}

/// A prime `p` and a simple root `r` of the modulus mod `p` give a
/// homomorphism from the local ring at `(p, θ − r)` onto `F_p`; if the image
/// of `a` is a nonzero non-residue, `a` has no square root.
fn certified_non_square(a: &FieldElement) -> bool {
    let modulus = prime_rationals(a.field.modulus());
    let coefs = rational_coefs(a);
    let mut tested = 0;
    let mut p = 2u64;
    while tested < 60 && p < 20_000 {
        p += 1;
        if !is_prime_u64(p) {
            continue;
        }
        let ring = ModP(p);
        let reduce = |v: &[BigRational]| -> Option<Vec<u64>> {
            v.iter()
                .map(|q| {
                    let d = ring.reduce_bigint(q.denom());
                    let di = ring.inv(&d)?;
                    Some(ring.mul(&ring.reduce_bigint(q.numer()), &di))
                })
                .collect()
        };
        let (Some(mp), Some(ap)) = (reduce(&modulus), reduce(&coefs)) else {
            continue;
        };
        let dm = derivative(&ring, &mp);
        let mut any_root = false;
        for r in 0..p.min(5000) {
            if eval(&ring, &mp, &r) != 0 || eval(&ring, &dm, &r) == 0 {
                continue;
            }
            any_root = true;
            let v = eval(&ring, &ap, &r);
            if v != 0 && !ring.is_square(v) {
                return true;
            }
        }
        if any_root {
            tested += 1;
        }
    }
    false
}

/// Propose `√a` from the complex embeddings and confirm it exactly.
fn numeric_sqrt(a: &FieldElement) -> Option<FieldElement> {
    let field = &a.field;
    let d = field.degree();
    if d > 16 {
        return None;
    }
    let m: Vec<f64> = field.modulus().iter().map(Coef::to_f64).collect();
    let roots = complex_roots(&m);
    let images: Vec<Complex64> = roots.iter().map(|&r| a.to_complex(r)).collect();
    let roots_of_images: Vec<Complex64> = images.iter().map(|z| z.sqrt()).collect();
    // inverse of the Vandermonde matrix, column by column
    let vander: Vec<Vec<Complex64>> = roots
        .iter()
        .map(|&r| (0..d).map(|i| r.powu(i as u32)).collect())
        .collect();
    let mut inv_cols = Vec::with_capacity(d);
    for j in 0..d {
        let mut e = vec![Complex64::zero(); d];
        e[j] = Complex64::new(1.0, 0.0);
        inv_cols.push(solve_complex(vander.clone(), e)?);
    }
    let scale = images.iter().fold(1.0f64, |m, z| m.max(z.norm().sqrt()));
    for signs in 0u64..(1u64 << (d - 1)) {
        let b: Vec<Complex64> = (0..d)
            .map(|k| {
                if k > 0 && (signs >> (k - 1)) & 1 == 1 {
                    -roots_of_images[k]
                } else {
                    roots_of_images[k]
                }
            })
            .collect();
        let x: Vec<Complex64> = (0..d)
            .map(|i| (0..d).fold(Complex64::zero(), |acc, j| acc + inv_cols[j][i] * b[j]))
            .collect();
        if x.iter().any(|v| v.im.abs() > 1e-6 * scale) {
            continue;
        }
        let Some(coefs) = x
            .iter()
            .map(|v| rational_approx(v.re, 1_000_000, 1e-8 * scale.max(1.0)).map(Coef::Q))
            .collect::<Option<Vec<_>>>()
        else {
            continue;
        };
        let cand = field.element(coefs);
        if &cand * &cand == *a {
            return Some(cand);
        }
    }
    None
}

/// A root of `μ² + μ = c` in characteristic 2, where `μ ↦ μ² + μ` is linear
/// over `F_2`.
pub(super) fn artin_schreier_root(c: &FieldElement) -> Option<FieldElement> {
    let field = &c.field;
    assert_eq!(field.characteristic(), 2, "only meaningful in characteristic 2");
    let n = field.degree();
    let ring = ModP(2);
    let coords = |e: &FieldElement| -> Vec<u64> {
        e.c.iter()
            .map(|x| match x {
                Coef::P(v) => *v,
                Coef::Q(_) => unreachable!(),
            })
            .collect()
    };
    let images: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            let mut v = vec![Coef::P(0); n];
            v[i] = Coef::P(1);
            let e = field.element(v);
            coords(&(&(&e * &e) + &e))
        })
        .collect();
    let target = coords(c);
    let rows: Vec<Vec<u64>> = (0..n)
        .map(|r| {
            let mut row: Vec<u64> = images.iter().map(|col| col[r]).collect();
            row.push(target[r]);
            row
        })
        .collect();
    let sol = kernel(&ring, &rows, n + 1).into_iter().find(|v| v[n] == 1)?;
    Some(field.element(sol[..n].iter().map(|&v| Coef::P(v)).collect()))
}
