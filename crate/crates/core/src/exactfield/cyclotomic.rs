//! Cyclotomic polynomials over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            while n % q == 0 {
                n /= q;
            }
            result -= result / q;
        }
        q += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// `Φ_n` as integer coefficients, lowest degree first.
pub fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic index must be positive");
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            num = exact_div_monic(&num, &cyclotomic_poly(d));
        }
    }
    num
}

fn exact_div_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for top in (db..rem.len()).rev() {
        let c = rem[top].clone();
        if c.is_zero() {
            continue;
        }
        let shift = top - db;
        for (i, bc) in b.iter().enumerate() {
            rem[shift + i] -= &c * bc;
        }
        quot[shift] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// The index `n` with `Φ_n = poly`, if any. `poly` must be monic with
/// integer coefficients.
pub fn cyclotomic_index(poly: &[BigInt]) -> Option<u64> {
    let d = poly.len().checked_sub(1)? as u64;
    if d == 0 {
        return None;
    }
    // φ(n) >= sqrt(n/2), so n <= 2 d^2
    (1..=2 * d * d + 2)
        .filter(|&n| euler_phi(n) == d)
        .find(|&n| cyclotomic_poly(n) == poly)
}

/// Order of the root of unity `ζ_n^k`.
pub fn root_order(n: u64, k: u64) -> u64 {
    n / n.gcd(&(k % n))
}
