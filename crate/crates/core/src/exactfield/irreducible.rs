//! Irreducibility tests for the minimal polynomials of simple extensions.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::cyclotomic::cyclotomic_index;
use super::numeric::complex_roots;
use super::scalar::{
    degree, derivative, is_prime_u64, make_monic, pow_mod, poly_divrem, poly_gcd, poly_sub, trim,
    ModP, Rationals, ScalarRing,
};

/// Outcome of an irreducibility test that may be inconclusive over `Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    Reducible,
    Undecided,
}

/// Degrees of the irreducible factors of a squarefree `f` over a finite field
/// with `q` elements (distinct-degree factorisation). Returns `None` if `f`
/// is not squarefree.
pub fn ddf_degrees<R: ScalarRing>(ring: &R, f: &[R::S], q: &BigUint) -> Option<Vec<usize>> {
    let mut f = make_monic(ring, f);
    let n = degree(ring, &f)?;
    if n == 0 {
        return Some(Vec::new());
    }
    let df = derivative(ring, &f);
    if df.is_empty() || degree(ring, &poly_gcd(ring, &f, &df)) != Some(0) {
        return None;
    }
    let mut degrees = Vec::new();
    let x = vec![ring.zero(), ring.one()];
    let mut h = x.clone();
    let mut i = 0usize;
    while let Some(df) = degree(ring, &f) {
        if df == 0 {
            break;
        }
        i += 1;
        if 2 * i > df {
            degrees.push(df);
            break;
        }
        h = pow_mod(ring, &h, q, &f);
        let g = poly_gcd(ring, &f, &poly_sub(ring, &h, &x));
        let dg = degree(ring, &g).unwrap_or(0);
        if dg > 0 {
            degrees.extend(std::iter::repeat_n(i, dg / i));
            f = poly_divrem(ring, &f, &g).0;
            h = poly_divrem(ring, &h, &f).1;
        }
    }
    Some(degrees)
}

pub fn factor_degrees_mod_p(f: &[u64], p: u64) -> Option<Vec<usize>> {
    ddf_degrees(&ModP(p), f, &BigUint::from(p))
}

pub fn irreducible_mod_p(f: &[u64], p: u64) -> bool {
    let ring = ModP(p);
    let n = degree(&ring, f).unwrap_or(0);
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    factor_degrees_mod_p(f, p).is_some_and(|d| d.len() == 1)
}

/// Rescale a monic rational polynomial to a monic integer polynomial with
/// the same splitting behaviour: `g(x) = D^n f(x / D)`.
pub fn integer_monic(f: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    let n = f.len() - 1;
    let d = f
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut pow = BigInt::one();
    let mut out = vec![BigInt::zero(); n + 1];
    for i in (0..=n).rev() {
        let v = &f[i] * BigRational::from_integer(pow.clone());
        debug_assert!(v.is_integer());
        out[i] = v.to_integer();
        pow *= &d;
    }
    (out, d)
}

fn eval_int(g: &[BigInt], x: &BigInt) -> BigInt {
    g.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Integer roots of a monic integer polynomial. `None` when the search could
/// not be made exhaustive.
fn integer_roots(g: &[BigInt]) -> Option<Vec<BigInt>> {
    let c0 = g[0].abs();
    if c0.is_zero() {
        return Some(vec![BigInt::zero()]);
    }
    let limit = BigInt::from(1_000_000_000_000u64);
    if c0 <= limit {
        let c = c0.to_u64().unwrap();
        let mut roots = Vec::new();
        let mut d = 1u64;
        while d * d <= c {
            if c % d == 0 {
                for cand in [d, c / d] {
                    for s in [BigInt::from(cand), -BigInt::from(cand)] {
                        if eval_int(g, &s).is_zero() && !roots.contains(&s) {
                            roots.push(s);
                        }
                    }
                }
            }
            d += 1;
        }
        return Some(roots);
    }
    None
}

fn subset_sums(degrees: &[usize]) -> BTreeSet<usize> {
    let mut sums = BTreeSet::from([0usize]);
    for &d in degrees {
        let next: Vec<usize> = sums.iter().map(|s| s + d).collect();
        sums.extend(next);
    }
    sums
}

/// Irreducibility over `Q` of a monic polynomial.
///
/// Decisive for degrees 2 and 3 whenever the constant term is small enough
/// for an exhaustive rational-root search; for higher degrees combines
/// factor-degree patterns modulo small primes with cyclotomic recognition.
pub fn irreducible_over_q(f: &[BigRational]) -> Irreducibility {
    let q = Rationals;
    let n = f.len() - 1;
    if n <= 1 {
        return if n == 1 {
            Irreducibility::Irreducible
        } else {
            Irreducibility::Reducible
        };
    }
    let df = derivative(&q, f);
    if degree(&q, &poly_gcd(&q, f, &df)) != Some(0) {
        return Irreducibility::Reducible;
    }
    let (g, _) = integer_monic(f);
    if let Some(roots) = integer_roots(&g) {
        if !roots.is_empty() {
            return Irreducibility::Reducible;
        }
        if n <= 3 {
            return Irreducibility::Irreducible;
        }
    } else if numeric_integer_root(&g) {
        return Irreducibility::Reducible;
    }
    if g.len() == f.len() && cyclotomic_index(&g).is_some() {
        return Irreducibility::Irreducible;
    }
    // possible degrees of a proper factor over Q must be realisable modulo every prime
    let mut possible: BTreeSet<usize> = (1..n).collect();
    let mut tested = 0;
    let mut p = 2u64;
    while tested < 40 && p < 2000 {
        p += 1;
        if !is_prime_u64(p) {
            continue;
        }
        let ring = ModP(p);
        let gp: Vec<u64> = g.iter().map(|c| ring.reduce_bigint(c)).collect();
        let Some(degs) = factor_degrees_mod_p(&gp, p) else {
            continue;
        };
        tested += 1;
        let sums = subset_sums(&degs);
        possible.retain(|d| sums.contains(d));
        if possible.is_empty() {
            return Irreducibility::Irreducible;
        }
    }
    Irreducibility::Undecided
}

fn numeric_integer_root(g: &[BigInt]) -> bool {
    let coeffs: Option<Vec<f64>> = g.iter().map(|c| c.to_f64()).collect();
    let Some(coeffs) = coeffs else {
        return false;
    };
    complex_roots(&coeffs).iter().any(|z| {
        let r = z.re.round();
        r.is_finite()
            && r.abs() < 1e15
            && eval_int(g, &BigInt::from(r as i64)).is_zero()
    })
}

/// Irreducibility over `F_p`, always decisive.
pub fn irreducible_over_fp(f: &[u64], p: u64) -> bool {
    let ring = ModP(p);
    let mut f = f.to_vec();
    trim(&ring, &mut f);
    irreducible_mod_p(&f, p)
}
