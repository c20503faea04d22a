//! Exact arithmetic over `Q`, `F_p` and towers of simple algebraic extensions.
//!
//! Every field is stored as a single simple extension of its prime field: a
//! tower `F[y]/(g)` over an extension `F` is flattened at construction to
//! `P[x]/(μ)` with a primitive element, and the change of basis is kept so
//! that elements can still be read and written in tower coordinates.

mod cyclotomic;
mod irreducible;
mod numeric;
mod parse;
mod scalar;
mod sqrt;
mod tower;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub use cyclotomic::{cyclotomic_poly, euler_phi, root_order};
pub use irreducible::{irreducible_over_fp, irreducible_over_q, Irreducibility};
pub use parse::ElementCode;
pub use scalar::{is_prime_u64, kernel, solve_square, ModP, Rationals, ScalarRing};

use scalar::{inv_mod, poly_mul, reduce_mod};

/// Serializable description of a field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Prime {
        p: u64,
    },
    Extension {
        base: Box<FieldSpec>,
        /// Coefficients over the base field, lowest degree first, monic.
        minpoly: Vec<ElementCode>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NonPrimeModulus(u64),
    #[error("minimal polynomial is reducible over the base field")]
    ReducibleMinpoly,
    #[error("could not decide irreducibility of the minimal polynomial")]
    IrreducibilityUndecided,
    #[error("invalid minimal polynomial: {0}")]
    InvalidMinpoly(String),
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("division by zero")]
    DivisionByZero,
    #[error("unsupported in this field: {0}")]
    UnsupportedField(String),
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

/// A coefficient in a prime field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coef {
    Q(BigRational),
    P(u64),
}

impl fmt::Display for Coef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coef::Q(q) => write!(f, "{q}"),
            Coef::P(v) => write!(f, "{v}"),
        }
    }
}

impl Coef {
    fn to_f64(&self) -> f64 {
        match self {
            Coef::Q(q) => q.to_f64().unwrap_or(f64::NAN),
            Coef::P(v) => *v as f64,
        }
    }
}

/// The prime field `Q` or `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PrimeField {
    Rational,
    Modular(u64),
}

impl PrimeField {
    pub fn characteristic(&self) -> u64 {
        match self {
            PrimeField::Rational => 0,
            PrimeField::Modular(p) => *p,
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Coef {
        match self {
            PrimeField::Rational => Coef::Q(BigRational::from_integer(v.clone())),
            PrimeField::Modular(p) => Coef::P(ModP(*p).reduce_bigint(v)),
        }
    }

    pub fn from_rational(&self, q: &BigRational) -> Option<Coef> {
        match self {
            PrimeField::Rational => Some(Coef::Q(q.clone())),
            PrimeField::Modular(p) => {
                let r = ModP(*p);
                let d = r.reduce_bigint(q.denom());
                let di = r.inv(&d)?;
                Some(Coef::P(r.mul(&r.reduce_bigint(q.numer()), &di)))
            }
        }
    }
}

impl ScalarRing for PrimeField {
    type S = Coef;

    fn zero(&self) -> Coef {
        match self {
            PrimeField::Rational => Coef::Q(BigRational::zero()),
            PrimeField::Modular(_) => Coef::P(0),
        }
    }

    fn one(&self) -> Coef {
        match self {
            PrimeField::Rational => Coef::Q(BigRational::one()),
            PrimeField::Modular(p) => Coef::P(1 % p),
        }
    }

    fn from_i64(&self, v: i64) -> Coef {
        match self {
            PrimeField::Rational => Coef::Q(BigRational::from_integer(v.into())),
            PrimeField::Modular(p) => Coef::P(ModP(*p).reduce_i64(v)),
        }
    }

    fn add(&self, a: &Coef, b: &Coef) -> Coef {
        match (self, a, b) {
            (_, Coef::Q(x), Coef::Q(y)) => Coef::Q(x + y),
            (PrimeField::Modular(p), Coef::P(x), Coef::P(y)) => Coef::P(ModP(*p).add(x, y)),
            _ => unreachable!("coefficient kinds are uniform within a field"),
        }
    }

    fn sub(&self, a: &Coef, b: &Coef) -> Coef {
        match (self, a, b) {
            (_, Coef::Q(x), Coef::Q(y)) => Coef::Q(x - y),
            (PrimeField::Modular(p), Coef::P(x), Coef::P(y)) => Coef::P(ModP(*p).sub(x, y)),
            _ => unreachable!("coefficient kinds are uniform within a field"),
        }
    }

    fn mul(&self, a: &Coef, b: &Coef) -> Coef {
        match (self, a, b) {
            (_, Coef::Q(x), Coef::Q(y)) => Coef::Q(x * y),
            (PrimeField::Modular(p), Coef::P(x), Coef::P(y)) => Coef::P(ModP(*p).mul(x, y)),
            _ => unreachable!("coefficient kinds are uniform within a field"),
        }
    }

    fn neg(&self, a: &Coef) -> Coef {
        match (self, a) {
            (_, Coef::Q(x)) => Coef::Q(-x),
            (PrimeField::Modular(p), Coef::P(x)) => Coef::P(ModP(*p).neg(x)),
            _ => unreachable!("coefficient kinds are uniform within a field"),
        }
    }

    fn inv(&self, a: &Coef) -> Option<Coef> {
        match (self, a) {
            (_, Coef::Q(x)) => Rationals.inv(x).map(Coef::Q),
            (PrimeField::Modular(p), Coef::P(x)) => ModP(*p).inv(x).map(Coef::P),
            _ => unreachable!("coefficient kinds are uniform within a field"),
        }
    }

    fn is_zero(&self, a: &Coef) -> bool {
        match a {
            Coef::Q(x) => x.is_zero(),
            Coef::P(x) => *x == 0,
        }
    }
}

/// Change of basis between flat coordinates and tower coordinates
/// (blocks of base-field coordinates, one block per power of the top generator).
#[derive(Debug)]
struct TowerMaps {
    to_tower: Vec<Vec<Coef>>,
    from_tower: Vec<Vec<Coef>>,
}

#[derive(Debug)]
struct FieldInner {
    spec: FieldSpec,
    prime: PrimeField,
    /// Monic modulus over the prime field; `x` for the prime field itself.
    modulus: Vec<Coef>,
    base: Option<Field>,
    tower: Option<TowerMaps>,
    top_degree: usize,
}

/// Shared, immutable handle to a field.
#[derive(Clone, Debug)]
pub struct Field(Arc<FieldInner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Field {}

impl Field {
    pub fn new(spec: &FieldSpec) -> Result<Field, FieldError> {
        match spec {
            FieldSpec::Rational => Ok(Self::prime_field(spec.clone(), PrimeField::Rational)),
            FieldSpec::Prime { p } => {
                if !is_prime_u64(*p) {
                    return Err(FieldError::NonPrimeModulus(*p));
                }
                Ok(Self::prime_field(spec.clone(), PrimeField::Modular(*p)))
            }
            FieldSpec::Extension { base, minpoly } => {
                let base = Field::new(base)?;
                let g = minpoly
                    .iter()
                    .map(|c| base.parse_code(c))
                    .collect::<Result<Vec<_>, _>>()?;
                if g.len() < 3 {
                    return Err(FieldError::InvalidMinpoly("degree must be at least 2".into()));
                }
                if !g.last().unwrap().is_one() {
                    return Err(FieldError::InvalidMinpoly("must be monic".into()));
                }
                let k = g.len() - 1;
                let prime = base.0.prime;
                let (modulus, tower) = if base.degree() == 1 {
                    let m: Vec<Coef> = g.iter().map(|e| e.c[0].clone()).collect();
                    check_prime_irreducible(prime, &m)?;
                    (m, None)
                } else {
                    let (m, maps) = tower::flatten(&base, &g)?;
                    (m, Some(maps))
                };
                Ok(Field(Arc::new(FieldInner {
                    spec: spec.clone(),
                    prime,
                    modulus,
                    base: Some(base),
                    tower,
                    top_degree: k,
                })))
            }
        }
    }

    fn prime_field(spec: FieldSpec, prime: PrimeField) -> Field {
        Field(Arc::new(FieldInner {
            spec,
            prime,
            modulus: vec![prime.zero(), prime.one()],
            base: None,
            tower: None,
            top_degree: 1,
        }))
    }

    pub fn rational() -> Field {
        Self::prime_field(FieldSpec::Rational, PrimeField::Rational)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    pub fn prime(&self) -> PrimeField {
        self.0.prime
    }

    pub fn characteristic(&self) -> u64 {
        self.0.prime.characteristic()
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> usize {
        self.0.modulus.len() - 1
    }

    /// Degree over the immediate base field.
    pub fn top_degree(&self) -> usize {
        self.0.top_degree
    }

    pub fn base(&self) -> Option<&Field> {
        self.0.base.as_ref()
    }

    /// Monic modulus over the prime field, lowest degree first.
    pub fn modulus(&self) -> &[Coef] {
        &self.0.modulus
    }

    pub fn is_finite(&self) -> bool {
        self.characteristic() != 0
    }

    /// Number of elements, for finite fields.
    pub fn order(&self) -> Option<BigUint> {
        match self.0.prime {
            PrimeField::Rational => None,
            PrimeField::Modular(p) => Some(BigUint::from(p).pow(self.degree() as u32)),
        }
    }

    pub fn same(&self, other: &Field) -> bool {
        self == other
    }

    pub fn element(&self, coefs: Vec<Coef>) -> FieldElement {
        let ring = self.0.prime;
        let c = if coefs.len() == self.degree() {
            coefs
        } else {
            reduce_mod(&ring, &coefs, &self.0.modulus)
        };
        FieldElement { field: self.clone(), c }
    }

    pub fn zero(&self) -> FieldElement {
        let ring = self.0.prime;
        self.element(vec![ring.zero(); self.degree()])
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldElement {
        let ring = self.0.prime;
        let mut c = vec![ring.zero(); self.degree()];
        c[0] = ring.from_i64(v);
        self.element(c)
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldElement {
        let ring = self.0.prime;
        let mut c = vec![ring.zero(); self.degree()];
        c[0] = ring.from_bigint(v);
        self.element(c)
    }

    pub fn from_rational(&self, q: &BigRational) -> Result<FieldElement, FieldError> {
        let ring = self.0.prime;
        let mut c = vec![ring.zero(); self.degree()];
        c[0] = ring.from_rational(q).ok_or(FieldError::DivisionByZero)?;
        Ok(self.element(c))
    }

    /// The primitive element `x` of the flat representation.
    pub fn flat_generator(&self) -> FieldElement {
        let ring = self.0.prime;
        self.element(vec![ring.zero(), ring.one()])
    }

    /// The generator adjoined at the top of the tower (`z` in element
    /// expressions). `None` for prime fields.
    pub fn generator(&self) -> Option<FieldElement> {
        self.base()?;
        let n = self.base().unwrap().degree();
        let ring = self.0.prime;
        let mut t = vec![ring.zero(); self.degree()];
        t[n] = ring.one();
        Some(self.from_tower_coords(&t))
    }

    /// Image of an element of the immediate base field.
    pub fn embed_base(&self, e: &FieldElement) -> FieldElement {
        let ring = self.0.prime;
        let mut t = e.c.clone();
        t.resize(self.degree(), ring.zero());
        self.from_tower_coords(&t)
    }

    fn from_tower_coords(&self, t: &[Coef]) -> FieldElement {
        match &self.0.tower {
            None => self.element(t.to_vec()),
            Some(maps) => self.element(mat_vec(self.0.prime, &maps.from_tower, t)),
        }
    }

    fn to_tower_coords(&self, e: &FieldElement) -> Vec<Coef> {
        match &self.0.tower {
            None => e.c.clone(),
            Some(maps) => mat_vec(self.0.prime, &maps.to_tower, &e.c),
        }
    }

    pub fn parse_code(&self, code: &ElementCode) -> Result<FieldElement, FieldError> {
        parse::decode(self, code)
    }

    pub fn parse_str(&self, s: &str) -> Result<FieldElement, FieldError> {
        parse::parse_expr(self, s)
    }

    /// Element with index `i` in a fixed enumeration of a finite field
    /// (base-`p` digits as flat coordinates).
    pub fn element_by_index(&self, mut i: u64) -> Option<FieldElement> {
        let PrimeField::Modular(p) = self.0.prime else {
            return None;
        };
        let mut c = Vec::with_capacity(self.degree());
        for _ in 0..self.degree() {
            c.push(Coef::P(i % p));
            i /= p;
        }
        (i == 0).then(|| self.element(c))
    }

    /// All elements of a finite field with at most `limit` elements.
    pub fn elements(&self, limit: u64) -> Option<Vec<FieldElement>> {
        let q = self.order()?.to_u64()?;
        if q > limit {
            return None;
        }
        Some((0..q).filter_map(|i| self.element_by_index(i)).collect())
    }
}

fn mat_vec(ring: PrimeField, m: &[Vec<Coef>], v: &[Coef]) -> Vec<Coef> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(ring.zero(), |acc, (a, b)| ring.add(&acc, &ring.mul(a, b)))
        })
        .collect()
}

fn check_prime_irreducible(prime: PrimeField, m: &[Coef]) -> Result<(), FieldError> {
    match prime {
        PrimeField::Modular(p) => {
            let f: Vec<u64> = m
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
            let f: Vec<BigRational> = m
                .iter()
                .map(|c| match c {
                    Coef::Q(q) => q.clone(),
                    Coef::P(_) => unreachable!(),
                })
                .collect();
            match irreducible_over_q(&f) {
                Irreducibility::Irreducible => Ok(()),
                Irreducibility::Reducible => Err(FieldError::ReducibleMinpoly),
                Irreducibility::Undecided => Err(FieldError::IrreducibilityUndecided),
            }
        }
    }
}

/// `Q(ζ_n) = Q[z]/(Φ_n)` together with `ζ_n`. For `n ≤ 2` this is `Q` itself.
pub fn cyclotomic_field(n: u64) -> (Field, FieldElement) {
    assert!(n >= 1);
    if n <= 2 {
        let q = Field::rational();
        let zeta = if n == 1 { q.one() } else { q.from_i64(-1) };
        return (q, zeta);
    }
    let minpoly = cyclotomic_poly(n)
        .iter()
        .map(|c| ElementCode::Scalar(c.to_string()))
        .collect();
    let spec = FieldSpec::Extension {
        base: Box::new(FieldSpec::Rational),
        minpoly,
    };
    let field = Field::new(&spec).expect("cyclotomic polynomials are irreducible");
    let zeta = field.generator().unwrap();
    (field, zeta)
}

/// `F_{p^k}` built from the first monic irreducible polynomial of degree `k`
/// in lexicographic order of coefficients (lowest degree most significant).
pub fn finite_field(p: u64, k: usize) -> Result<Field, FieldError> {
    if !is_prime_u64(p) {
        return Err(FieldError::NonPrimeModulus(p));
    }
    if k == 1 {
        return Field::new(&FieldSpec::Prime { p });
    }
    let total = (p as u128).pow(k as u32);
    for idx in 0..total {
        let mut f = Vec::with_capacity(k + 1);
        let mut i = idx;
        for _ in 0..k {
            f.push((i % p as u128) as u64);
            i /= p as u128;
        }
        f.push(1);
        if irreducible_over_fp(&f, p) {
            let spec = FieldSpec::Extension {
                base: Box::new(FieldSpec::Prime { p }),
                minpoly: f.iter().map(|c| ElementCode::Scalar(c.to_string())).collect(),
            };
            return Field::new(&spec);
        }
    }
    Err(FieldError::InvalidMinpoly("no irreducible polynomial found".into()))
}

/// An element of a [`Field`], stored as reduced coordinates in the flat basis.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    c: Vec<Coef>,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.c.hash(state);
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.c.cmp(&other.c)
    }
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Flat coordinates over the prime field.
    pub fn coefs(&self) -> &[Coef] {
        &self.c
    }

    fn ring(&self) -> PrimeField {
        self.field.0.prime
    }

    pub fn is_zero(&self) -> bool {
        let r = self.ring();
        self.c.iter().all(|x| r.is_zero(x))
    }

    pub fn is_one(&self) -> bool {
        let r = self.ring();
        r.is_one(&self.c[0]) && self.c[1..].iter().all(|x| r.is_zero(x))
    }

    /// The value as a prime-field scalar when it lies there.
    pub fn as_prime(&self) -> Option<&Coef> {
        let r = self.ring();
        self.c[1..].iter().all(|x| r.is_zero(x)).then(|| &self.c[0])
    }

    fn check(&self, other: &FieldElement) -> Result<(), FieldError> {
        if self.field.same(&other.field) {
            Ok(())
        } else {
            Err(FieldError::MixedFields)
        }
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(other)?;
        let r = self.ring();
        let c = self.c.iter().zip(&other.c).map(|(a, b)| r.add(a, b)).collect();
        Ok(FieldElement { field: self.field.clone(), c })
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(other)?;
        let r = self.ring();
        let c = self.c.iter().zip(&other.c).map(|(a, b)| r.sub(a, b)).collect();
        Ok(FieldElement { field: self.field.clone(), c })
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(other)?;
        let r = self.ring();
        let c = if self.c.len() == 1 {
            vec![r.mul(&self.c[0], &other.c[0])]
        } else {
            reduce_mod(&r, &poly_mul(&r, &self.c, &other.c), &self.field.0.modulus)
        };
        Ok(FieldElement { field: self.field.clone(), c })
    }

    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.checked_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        let r = self.ring();
        let c = if self.c.len() == 1 {
            vec![r.inv(&self.c[0]).ok_or(FieldError::DivisionByZero)?]
        } else {
            if self.is_zero() {
                return Err(FieldError::DivisionByZero);
            }
            inv_mod(&r, &self.c, &self.field.0.modulus).ok_or(FieldError::DivisionByZero)?
        };
        Ok(FieldElement { field: self.field.clone(), c })
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.pow_big(&BigUint::from(e))
    }

    pub fn pow_big(&self, e: &BigUint) -> FieldElement {
        let mut acc = self.field.one();
        for i in (0..e.bits()).rev() {
            acc = &acc * &acc;
            if e.bit(i) {
                acc = &acc * self;
            }
        }
        acc
    }

    /// Integer powers; negative exponents require a nonzero element.
    pub fn powi(&self, e: i64) -> Result<FieldElement, FieldError> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    /// Least `n ≤ bound` with `selfⁿ = 1`.
    pub fn mult_order(&self, bound: u64) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let mut acc = self.clone();
        for n in 1..=bound {
            if acc.is_one() {
                return Some(n);
            }
            acc = &acc * self;
        }
        None
    }

    /// A square root in this field, `None` when there is none.
    ///
    /// Always decisive over finite fields and `Q`. In other number fields
    /// non-squares are certified by a residue modulo a prime and squares are
    /// found from the complex embeddings and checked exactly; elements where
    /// neither succeeds give `UnsupportedField`.
    pub fn sqrt(&self) -> Result<Option<FieldElement>, FieldError> {
        sqrt::sqrt(self)
    }

    /// A root of `μ² + μ = self` in characteristic 2.
    pub fn artin_schreier_root(&self) -> Option<FieldElement> {
        sqrt::artin_schreier_root(self)
    }

    pub fn to_code(&self) -> ElementCode {
        parse::encode(self)
    }

    /// Coordinates over the immediate base field.
    pub fn base_coords(&self) -> Option<Vec<FieldElement>> {
        let base = self.field.base()?;
        let n = base.degree();
        let t = self.field.to_tower_coords(self);
        Some(t.chunks(n).map(|ch| base.element(ch.to_vec())).collect())
    }

    /// Approximate complex value under the embedding sending the flat
    /// generator to `root`.
    pub fn to_complex(&self, root: num_complex::Complex64) -> num_complex::Complex64 {
        self.c
            .iter()
            .rev()
            .fold(num_complex::Complex64::zero(), |acc, c| acc * root + c.to_f64())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        parse::display(self, f)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("operands belong to different fields")
            }
        }
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
        impl $tr<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let r = self.ring();
        FieldElement {
            field: self.field.clone(),
            c: self.c.iter().map(|x| r.neg(x)).collect(),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

/// Polynomial and linear-algebra helpers run over a field through this impl.
impl ScalarRing for Field {
    type S = FieldElement;

    fn zero(&self) -> FieldElement {
        Field::zero(self)
    }
    fn one(&self) -> FieldElement {
        Field::one(self)
    }
    fn from_i64(&self, v: i64) -> FieldElement {
        Field::from_i64(self, v)
    }
    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a + b
    }
    fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a - b
    }
    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a * b
    }
    fn neg(&self, a: &FieldElement) -> FieldElement {
        -a
    }
    fn inv(&self, a: &FieldElement) -> Option<FieldElement> {
        a.inv().ok()
    }
    fn is_zero(&self, a: &FieldElement) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &FieldElement) -> bool {
        a.is_one()
    }
}

/// Exact square root of a nonnegative rational, if rational.
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| BigRational::new(n, d))
}
