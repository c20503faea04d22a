//! Prime-field scalars and dense polynomial helpers shared by every field kind.
//!
//! Polynomials are coefficient vectors, lowest degree first. Helpers that take
//! a modulus assume it is monic.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arithmetic context for a commutative ring of coefficients.
///
/// The context carries whatever the elements themselves do not (the modulus
/// for `F_p`, the field handle for extension elements).
pub trait ScalarRing {
    type S: Clone + Eq + Hash + Ord + Debug;

    fn zero(&self) -> Self::S;
    fn one(&self) -> Self::S;
    fn from_i64(&self, v: i64) -> Self::S;
    fn add(&self, a: &Self::S, b: &Self::S) -> Self::S;
    fn sub(&self, a: &Self::S, b: &Self::S) -> Self::S;
    fn mul(&self, a: &Self::S, b: &Self::S) -> Self::S;
    fn neg(&self, a: &Self::S) -> Self::S;
    /// `None` for zero (and for non-units, where that applies).
    fn inv(&self, a: &Self::S) -> Option<Self::S>;
    fn is_zero(&self, a: &Self::S) -> bool;

    fn is_one(&self, a: &Self::S) -> bool {
        *a == self.one()
    }
}

/// The rational numbers.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl ScalarRing for Rationals {
    type S = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
}

/// Integers modulo a prime `p < 2^63`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModP(pub u64);

impl ModP {
    pub fn reduce_i64(&self, v: i64) -> u64 {
        let p = self.0 as i128;
        (((v as i128) % p + p) % p) as u64
    }

    pub fn reduce_bigint(&self, v: &BigInt) -> u64 {
        let p = BigInt::from(self.0);
        let r = ((v % &p) + &p) % &p;
        u64::try_from(r).expect("residue fits in u64")
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    /// Legendre symbol style test: `Some(true)` for a nonzero square.
    pub fn is_square(&self, a: u64) -> bool {
        let p = self.0;
        if a % p == 0 || p == 2 {
            return true;
        }
        self.pow(a, (p - 1) / 2) == 1
    }

    /// Tonelli–Shanks.
    pub fn sqrt(&self, a: u64) -> Option<u64> {
        let p = self.0;
        let a = a % p;
        if a == 0 || p == 2 {
            return Some(a);
        }
        if !self.is_square(a) {
            return None;
        }
        let mut q = p - 1;
        let mut s = 0u32;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let mut z = 2u64;
        while self.is_square(z) {
            z += 1;
        }
        let mut m = s;
        let mut c = self.pow(z, q);
        let mut t = self.pow(a, q);
        let mut r = self.pow(a, (q + 1) / 2);
        while t != 1 {
            let mut i = 0u32;
            let mut t2 = t;
            while t2 != 1 {
                t2 = self.mul(&t2, &t2);
                i += 1;
            }
            let mut b = c;
            for _ in 0..(m - i - 1) {
                b = self.mul(&b, &b);
            }
            m = i;
            c = self.mul(&b, &b);
            t = self.mul(&t, &c);
            r = self.mul(&r, &b);
        }
        Some(r)
    }
}

impl ScalarRing for ModP {
    type S = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.0
    }
    fn from_i64(&self, v: i64) -> u64 {
        self.reduce_i64(v)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + (self.0 - b)
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.0 as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.0 - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a % self.0 == 0 {
            return None;
        }
        // extended Euclid on signed 128-bit values
        let (mut r0, mut r1) = (self.0 as i128, *a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        let p = self.0 as i128;
        Some((((t0 % p) + p) % p) as u64)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &SMALL {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let ring = ModP(n);
    'witness: for &a in &SMALL {
        let mut x = ring.pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ring.mul(&x, &x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn trim<R: ScalarRing>(ring: &R, p: &mut Vec<R::S>) {
    while p.last().is_some_and(|c| ring.is_zero(c)) {
        p.pop();
    }
}

/// Degree of a trimmed polynomial; `None` for the zero polynomial.
pub fn degree<R: ScalarRing>(ring: &R, p: &[R::S]) -> Option<usize> {
    p.iter().rposition(|c| !ring.is_zero(c))
}

pub fn poly_sub<R: ScalarRing>(ring: &R, a: &[R::S], b: &[R::S]) -> Vec<R::S> {
    let n = a.len().max(b.len());
    let zero = ring.zero();
    let mut out: Vec<R::S> = (0..n)
        .map(|i| ring.sub(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect();
    trim(ring, &mut out);
    out
}

pub fn poly_scale<R: ScalarRing>(ring: &R, a: &[R::S], c: &R::S) -> Vec<R::S> {
    let mut out: Vec<R::S> = a.iter().map(|x| ring.mul(x, c)).collect();
    trim(ring, &mut out);
    out
}

pub fn poly_mul<R: ScalarRing>(ring: &R, a: &[R::S], b: &[R::S]) -> Vec<R::S> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![ring.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if ring.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if ring.is_zero(y) {
                continue;
            }
            out[i + j] = ring.add(&out[i + j], &ring.mul(x, y));
        }
    }
    trim(ring, &mut out);
    out
}

/// Quotient and remainder by a nonzero divisor whose leading coefficient is a unit.
pub fn poly_divrem<R: ScalarRing>(
    ring: &R,
    a: &[R::S],
    b: &[R::S],
) -> (Vec<R::S>, Vec<R::S>) {
    let db = degree(ring, b).expect("division by the zero polynomial");
    let lead_inv = ring.inv(&b[db]).expect("leading coefficient must be a unit");
    let mut rem: Vec<R::S> = a.to_vec();
    trim(ring, &mut rem);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![ring.zero(); rem.len() - db];
    while let Some(dr) = degree(ring, &rem) {
        if dr < db {
            break;
        }
        let c = ring.mul(&rem[dr], &lead_inv);
        let shift = dr - db;
        for (i, bc) in b[..=db].iter().enumerate() {
            rem[shift + i] = ring.sub(&rem[shift + i], &ring.mul(&c, bc));
        }
        quot[shift] = c;
        trim(ring, &mut rem);
    }
    trim(ring, &mut quot);
    (quot, rem)
}

/// Remainder modulo a monic polynomial, padded to exactly `deg(modulus)` entries.
pub fn reduce_mod<R: ScalarRing>(ring: &R, a: &[R::S], modulus: &[R::S]) -> Vec<R::S> {
    let n = modulus.len() - 1;
    let mut rem: Vec<R::S> = a.to_vec();
    if rem.len() > n {
        for top in (n..rem.len()).rev() {
            if ring.is_zero(&rem[top]) {
                continue;
            }
            let c = rem[top].clone();
            let shift = top - n;
            for (i, m) in modulus[..n].iter().enumerate() {
                if !ring.is_zero(m) {
                    rem[shift + i] = ring.sub(&rem[shift + i], &ring.mul(&c, m));
                }
            }
            rem[top] = ring.zero();
        }
        rem.truncate(n);
    }
    rem.resize(n, ring.zero());
    rem
}

pub fn mul_mod<R: ScalarRing>(ring: &R, a: &[R::S], b: &[R::S], modulus: &[R::S]) -> Vec<R::S> {
    reduce_mod(ring, &poly_mul(ring, a, b), modulus)
}

pub fn pow_mod<R: ScalarRing>(ring: &R, base: &[R::S], exp: &BigUint, modulus: &[R::S]) -> Vec<R::S> {
    let n = modulus.len() - 1;
    let mut acc = vec![ring.zero(); n];
    acc[0] = ring.one();
    let mut acc = reduce_mod(ring, &acc, modulus);
    let b = reduce_mod(ring, base, modulus);
    for i in (0..exp.bits()).rev() {
        acc = mul_mod(ring, &acc, &acc, modulus);
        if exp.bit(i) {
            acc = mul_mod(ring, &acc, &b, modulus);
        }
    }
    acc
}

/// Monic gcd. The gcd of two zero polynomials is the zero polynomial.
pub fn poly_gcd<R: ScalarRing>(ring: &R, a: &[R::S], b: &[R::S]) -> Vec<R::S> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(ring, &mut x);
    trim(ring, &mut y);
    while !y.is_empty() {
        let (_, r) = poly_divrem(ring, &x, &y);
        x = y;
        y = r;
    }
    make_monic(ring, &x)
}

pub fn make_monic<R: ScalarRing>(ring: &R, a: &[R::S]) -> Vec<R::S> {
    match degree(ring, a) {
        None => Vec::new(),
        Some(d) => {
            let inv = ring.inv(&a[d]).expect("leading coefficient must be a unit");
            a[..=d].iter().map(|c| ring.mul(c, &inv)).collect()
        }
    }
}

/// Inverse of `a` modulo `modulus` via extended Euclid; `None` if not coprime.
pub fn inv_mod<R: ScalarRing>(ring: &R, a: &[R::S], modulus: &[R::S]) -> Option<Vec<R::S>> {
    let mut r0 = modulus.to_vec();
    let mut r1 = a.to_vec();
    trim(ring, &mut r0);
    trim(ring, &mut r1);
    let mut t0: Vec<R::S> = Vec::new();
    let mut t1: Vec<R::S> = vec![ring.one()];
    while !r1.is_empty() {
        let (q, r) = poly_divrem(ring, &r0, &r1);
        let t = poly_sub(ring, &t0, &poly_mul(ring, &q, &t1));
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t;
    }
    if degree(ring, &r0) != Some(0) {
        return None;
    }
    let c = ring.inv(&r0[0])?;
    let t = poly_scale(ring, &t0, &c);
    Some(reduce_mod(ring, &t, modulus))
}

pub fn derivative<R: ScalarRing>(ring: &R, a: &[R::S]) -> Vec<R::S> {
    let mut out: Vec<R::S> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| ring.mul(c, &ring.from_i64(i as i64)))
        .collect();
    trim(ring, &mut out);
    out
}

pub fn eval<R: ScalarRing>(ring: &R, a: &[R::S], x: &R::S) -> R::S {
    a.iter()
        .rev()
        .fold(ring.zero(), |acc, c| ring.add(&ring.mul(&acc, x), c))
}

/// Gaussian elimination: solve `m · x = rhs` for a square invertible `m`
/// given as rows. Returns `None` if `m` is singular.
pub fn solve_square<R: ScalarRing>(
    ring: &R,
    m: &[Vec<R::S>],
    rhs: &[R::S],
) -> Option<Vec<R::S>> {
    let n = m.len();
    let mut aug: Vec<Vec<R::S>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !ring.is_zero(&aug[r][col]))?;
        aug.swap(col, piv);
        let inv = ring.inv(&aug[col][col])?;
        for c in col..=n {
            aug[col][c] = ring.mul(&aug[col][c], &inv);
        }
        for r in 0..n {
            if r != col && !ring.is_zero(&aug[r][col]) {
                let f = aug[r][col].clone();
                for c in col..=n {
                    let v = ring.mul(&f, &aug[col][c]);
                    aug[r][c] = ring.sub(&aug[r][c], &v);
                }
            }
        }
    }
    Some(aug.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// A basis of the right kernel of `m` (rows of length `cols`).
pub fn kernel<R: ScalarRing>(ring: &R, m: &[Vec<R::S>], cols: usize) -> Vec<Vec<R::S>> {
    let mut a: Vec<Vec<R::S>> = m.to_vec();
    let rows = a.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !ring.is_zero(&a[i][c])) else {
            continue;
        };
        a.swap(r, p);
        let inv = ring.inv(&a[r][c]).expect("nonzero pivot in a field");
        for k in c..cols {
            a[r][k] = ring.mul(&a[r][k], &inv);
        }
        for i in 0..rows {
            if i != r && !ring.is_zero(&a[i][c]) {
                let f = a[i][c].clone();
                for k in c..cols {
                    let v = ring.mul(&f, &a[r][k]);
                    a[i][k] = ring.sub(&a[i][k], &v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![ring.zero(); cols];
            v[f] = ring.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = ring.neg(&a[row][f]);
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn miller_rabin_matches_trial_division() {
        let trial = |n: u64| n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0);
        for n in 0..5000u64 {
            assert_eq!(is_prime_u64(n), trial(n), "n = {n}");
        }
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(3_215_031_751));
    }

    #[test]
    fn tonelli_shanks_finds_every_square() {
        for &p in &[3u64, 5, 7, 13, 17, 41, 97, 257] {
            let ring = ModP(p);
            for a in 0..p {
                let squares: Vec<u64> = (0..p).filter(|x| x * x % p == a).collect();
                match ring.sqrt(a) {
                    Some(r) => assert_eq!(r * r % p, a),
                    None => assert!(squares.is_empty(), "p={p} a={a}"),
                }
            }
        }
    }

    #[test]
    fn modp_inverse() {
        let ring = ModP(5);
        assert_eq!(ring.inv(&2), Some(3));
        assert_eq!(ring.inv(&0), None);
    }

    #[test]
    fn inverse_mod_polynomial_over_q() {
        let q = Rationals;
        let m = vec![q.one(), q.zero(), q.one()]; // z^2 + 1
        let a = vec![q.one(), q.one()]; // 1 + z
        let inv = inv_mod(&q, &a, &m).unwrap();
        let prod = mul_mod(&q, &a, &inv, &m);
        assert_eq!(prod, vec![q.one(), q.zero()]);
    }
}
