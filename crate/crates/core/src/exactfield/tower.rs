//! Flattening `F[y]/(g)` over an extension `F` to a simple extension of the
//! prime field.

use num_rational::BigRational;

use super::irreducible::{irreducible_over_fp, irreducible_over_q, Irreducibility};
use super::scalar::{poly_mul, reduce_mod, solve_square, ScalarRing};
use super::{Coef, Field, FieldElement, FieldError, PrimeField, TowerMaps};

/// Coordinates of an element of `F[y]/(g)` over the prime field.
fn flat(elem: &[FieldElement]) -> Vec<Coef> {
    let mut out = Vec::new();
    for e in elem {
        out.extend(e.coefs().iter().cloned());
    }
    out
}

fn candidates(base: &Field) -> Vec<FieldElement> {
    match base.elements(4096) {
        Some(all) => all,
        None => {
            let x = base.flat_generator();
            let mut out = Vec::new();
            for c in 0..40 {
                out.push(&x * &base.from_i64(c));
                out.push(&(&x * &x) * &base.from_i64(c + 1));
            }
            out
        }
    }
}

pub(super) fn flatten(
    base: &Field,
    g: &[FieldElement],
) -> Result<(Vec<Coef>, TowerMaps), FieldError> {
    let ring = base.prime();
    let n = base.degree();
    let k = g.len() - 1;
    let total = n * k;
    let mul = |a: &[FieldElement], b: &[FieldElement]| -> Vec<FieldElement> {
        reduce_mod(base, &poly_mul(base, a, b), g)
    };
    let mut one = vec![base.zero(); k];
    one[0] = base.one();
    for e in candidates(base) {
        // φ = y + e
        let mut phi = vec![base.zero(); k];
        phi[0] = e;
        phi[1] = base.one();
        let phi = reduce_mod(base, &phi, g);
        let mut powers = Vec::with_capacity(total + 1);
        let mut cur = one.clone();
        for _ in 0..=total {
            powers.push(flat(&cur));
            cur = mul(&cur, &phi);
        }
        // columns of P are the first `total` powers
        let p_rows: Vec<Vec<Coef>> = (0..total)
            .map(|r| (0..total).map(|c| powers[c][r].clone()).collect())
            .collect();
        let Some(rel) = solve_square(&ring, &p_rows, &powers[total]) else {
            continue;
        };
        let mut mu: Vec<Coef> = rel.iter().map(|c| ring.neg(c)).collect();
        mu.push(ring.one());
        check_irreducible(base, g, ring, &mu)?;
        let mut inv_cols = Vec::with_capacity(total);
        for j in 0..total {
            let mut unit = vec![ring.zero(); total];
            unit[j] = ring.one();
            inv_cols.push(solve_square(&ring, &p_rows, &unit).expect("P is invertible"));
        }
        let from_tower = (0..total)
            .map(|r| (0..total).map(|c| inv_cols[c][r].clone()).collect())
            .collect();
        return Ok((
            mu,
            TowerMaps {
                to_tower: p_rows,
                from_tower,
            },
        ));
    }
    Err(FieldError::IrreducibilityUndecided)
}

/// `F[y]/(g) ≅ P[x]/(μ)`, so `g` is irreducible over `F` exactly when `μ` is
/// irreducible over the prime field `P`.
fn check_irreducible(
    base: &Field,
    g: &[FieldElement],
    ring: PrimeField,
    mu: &[Coef],
) -> Result<(), FieldError> {
    match ring {
        PrimeField::Modular(p) => {
            let f: Vec<u64> = mu
                .iter()
                .map(|c| match c {
                    Coef::P(v) => *v,
                    Coef::Q(_) => unreachable!(),
                })
                .collect();
            if irreducible_over_fp(&f, p) {
                Ok(())
            } else {
                Err(FieldError::ReducibleMinpoly)
            }
        }
        PrimeField::Rational => {
            let f: Vec<BigRational> = mu
                .iter()
                .map(|c| match c {
                    Coef::Q(q) => q.clone(),
                    Coef::P(_) => unreachable!(),
                })
                .collect();
            match irreducible_over_q(&f) {
                Irreducibility::Irreducible => Ok(()),
                Irreducibility::Reducible => Err(FieldError::ReducibleMinpoly),
                Irreducibility::Undecided if g.len() == 3 => {
                    // a quadratic is irreducible iff its discriminant is not a square
                    let disc = &(&g[1] * &g[1]) - &(&base.from_i64(4) * &g[0]);
                    match disc.sqrt() {
                        Ok(None) => Ok(()),
                        Ok(Some(_)) => Err(FieldError::ReducibleMinpoly),
                        Err(_) => Err(FieldError::IrreducibilityUndecided),
                    }
                }
                Irreducibility::Undecided => Err(FieldError::IrreducibilityUndecided),
            }
        }
    }
}
