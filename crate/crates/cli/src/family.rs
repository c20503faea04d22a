//! Builders for the named families of configurations.
//!
//! Each builder picks the smallest convenient field holding its parameters,
//! unless a field is supplied, and attaches the group it is expected to give.

use serde::{Deserialize, Serialize};

use skewlines::config::{ConfigError, LineConfig};
use skewlines::exactfield::{cyclotomic_field, finite_field, Field, FieldElement, FieldError, FieldSpec};
use skewlines::groupoid::GroupLabel;
use skewlines::linalg2::Mat2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// `{L₀, L∞} ∪ {diag(εʲ, ε⁻ʲ) : 0 ≤ j < n}`.
    StandardConstruction { n: u64 },
    /// `{L₀, L∞, I, diag(a, d)}` with `a/d = u₁`, `(a − 1)/(d − 1) = u₂`.
    /// When the orders agree, `u₂ = u₁⁻¹`.
    Cyclic4Line { u1_order: u64, u2_order: u64 },
    /// `{L₀, L∞, I} ∪ {[[aᵢ, b], [0, aᵢ]]}` over `F_{p^degree}`; the `aᵢ`
    /// default to the generator `z`.
    ElementaryAbelian {
        p: u64,
        #[serde(default = "default_degree")]
        degree: usize,
        #[serde(default)]
        a: Vec<String>,
        #[serde(default = "default_b")]
        b: String,
    },
    /// `{L₀, L∞, I, −I + E₁₂, diag(a, a⁻¹)}` with `a² = a_square ∈ F_p`.
    Affine { p: u64, a_square: i64 },
    /// `{L₀, L∞} ∪ C̃₃ ∪ tC̃₃` with `s = ζ_{s_order}` and
    /// `t = (ε(1 + s) + s)/(1 − s)`.
    C3Scaled { s_order: u64 },
    /// The icosahedral configuration, over `Q(ζ₂₀)`.
    Icosahedral,
    /// The octahedral configuration, over `Q(i)`.
    Octahedral,
    /// The tetrahedral configuration with parameter `a`, over `Q(ζ₆)`.
    Tetrahedral {
        #[serde(default = "default_b")]
        a: String,
    },
}

fn default_degree() -> usize {
    2
}

fn default_b() -> String {
    "1".into()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    #[serde(flatten)]
    pub family: Family,
    /// Build in this field instead of the default one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
}

/// What the construction is documented to produce.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedGroup {
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<GroupLabel>,
}

#[derive(Clone, Debug)]
pub struct BuiltFamily {
    pub spec: FamilySpec,
    pub config: LineConfig,
    pub expected: ExpectedGroup,
}

#[derive(Debug, thiserror::Error)]
pub enum FamilyError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Config(#[from] ConfigError),
}

fn bad(msg: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParameters(msg.into())
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// A primitive `n`-th root of unity in `field`, if one is easy to find: by
/// search in a finite field, or as a power of `±ζ` in a cyclotomic field.
pub fn primitive_root(field: &Field, n: u64) -> Option<FieldElement> {
    if n == 1 {
        return Some(field.one());
    }
    if n == 2 {
        return (field.characteristic() != 2).then(|| field.from_i64(-1));
    }
    if let Some(q) = field.order() {
        let q: u64 = q.try_into().ok()?;
        if (q - 1) % n != 0 {
            return None;
        }
        return (1..q)
            .filter_map(|i| field.element_by_index(i))
            .map(|x| x.pow((q - 1) / n))
            .find(|x| x.mult_order(n) == Some(n));
    }
    let z = field.generator()?;
    for g in [z.clone(), -&z] {
        if let Some(m) = g.mult_order(1 << 12) {
            if m % n == 0 {
                return Some(g.pow(m / n));
            }
        }
    }
    None
}

fn root(field: &Field, n: u64) -> Result<FieldElement, FamilyError> {
    primitive_root(field, n).ok_or_else(|| bad(format!("the field has no primitive {n}-th root of unity in reach")))
}

fn field_or(spec: &Option<FieldSpec>, default: impl FnOnce() -> Result<Field, FieldError>) -> Result<Field, FamilyError> {
    Ok(match spec {
        Some(s) => Field::new(s)?,
        None => default()?,
    })
}

fn cyclotomic(m: u64) -> Result<Field, FieldError> {
    Ok(cyclotomic_field(m).0)
}

/// Reads a field from JSON or from one of the short forms `Q`, `Q(zeta<n>)`,
/// `GF(<q>)` and `GF(<p>^<k>)`.
pub fn parse_field(s: &str) -> Result<FieldSpec, FamilyError> {
    let s = s.trim();
    if s.starts_with('{') {
        return serde_json::from_str(s).map_err(|e| bad(format!("field: {e}")));
    }
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = |prefix: &str| {
        compact
            .strip_prefix(prefix)
            .and_then(|r| r.strip_suffix(')'))
            .map(str::to_string)
    };
    let num = |t: &str| t.parse::<u64>().map_err(|_| bad(format!("field: bad number {t:?}")));
    if compact == "Q" {
        return Ok(Field::rational().spec().clone());
    }
    if let Some(n) = inner("Q(zeta") {
        let n = num(&n)?;
        if n == 0 {
            return Err(bad("field: zeta0"));
        }
        return Ok(cyclotomic_field(n).0.spec().clone());
    }
    if let Some(q) = inner("GF(") {
        let (p, k) = match q.split_once('^') {
            Some((p, k)) => (num(p)?, num(k)? as usize),
            None => prime_power(num(&q)?).ok_or_else(|| bad(format!("field: {q} is not a prime power")))?,
        };
        return Ok(finite_field(p, k)?.spec().clone());
    }
    Err(bad(format!("field: cannot read {s:?}")))
}

fn prime_power(q: u64) -> Option<(u64, usize)> {
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut r, mut k) = (q, 0);
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

fn standard_config(k: &Field, mats: Vec<Mat2>) -> Result<LineConfig, FamilyError> {
    Ok(LineConfig::standard(k, mats)?)
}

impl FamilySpec {
    pub fn new(family: Family) -> FamilySpec {
        FamilySpec { family, field: None }
    }

    pub fn with_field(mut self, field: FieldSpec) -> FamilySpec {
        self.field = Some(field);
        self
    }

    pub fn build(&self) -> Result<BuiltFamily, FamilyError> {
        let (config, expected) = match &self.family {
            Family::StandardConstruction { n } => standard_construction(*n, &self.field)?,
            Family::Cyclic4Line { u1_order, u2_order } => cyclic_4line(*u1_order, *u2_order, &self.field)?,
            Family::ElementaryAbelian { p, degree, a, b } => elementary_abelian(*p, *degree, a, b, &self.field)?,
            Family::Affine { p, a_square } => affine(*p, *a_square, &self.field)?,
            Family::C3Scaled { s_order } => c3_scaled(*s_order, &self.field)?,
            Family::Icosahedral => icosahedral(&self.field)?,
            Family::Octahedral => octahedral(&self.field)?,
            Family::Tetrahedral { a } => tetrahedral(a, &self.field)?,
        };
        Ok(BuiltFamily {
            spec: self.clone(),
            config,
            expected,
        })
    }
}

/// Every matrix is `±I` when `n ≤ 2`, so the group is trivial there; from
/// `n = 3` on it is cyclic of order `lcm(2, n)`.
fn standard_construction(n: u64, field: &Option<FieldSpec>) -> Result<(LineConfig, ExpectedGroup), FamilyError> {
    if n < 2 {
        return Err(bad("n must be at least 2"));
    }
    let k = field_or(field, || cyclotomic(n))?;
    let eps = root(&k, n)?;
    let m = Mat2::diag(eps.clone(), eps.inv()?);
    let cfg = standard_config(&k, (0..n).map(|j| m.pow(j)).collect())?;
    let order = if n == 2 { 1 } else { lcm(2, n) as usize };
    Ok((cfg, cyclic(order)))
}

fn cyclic(order: usize) -> ExpectedGroup {
    let label = if order == 1 {
        GroupLabel::Trivial
    } else {
        GroupLabel::Cyclic { n: order }
    };
    ExpectedGroup {
        order,
        label: Some(label),
    }
}

fn cyclic_4line(m: u64, n: u64, field: &Option<FieldSpec>) -> Result<(LineConfig, ExpectedGroup), FamilyError> {
    if m < 2 || n < 2 {
        return Err(bad("u₁ and u₂ must differ from 1"));
    }
    if m == 2 && n == 2 {
        return Err(bad("u₁ and u₂ must be distinct, so the group cannot be C₂"));
    }
    let k = field_or(field, || cyclotomic(lcm(m, n)))?;
    let u1 = root(&k, m)?;
    let u2 = if m == n { u1.inv()? } else { root(&k, n)? };
    let one = k.one();
    // d = (1 − u₂)/(u₁ − u₂), a = u₁ d
    let d = (&one - &u2).checked_div(&(&u1 - &u2))?;
    let a = &u1 * &d;
    let cfg = standard_config(&k, vec![Mat2::identity(&k), Mat2::diag(a, d)])?;
    Ok((cfg, cyclic(lcm(m, n) as usize)))
}

fn elementary_abelian(
    p: u64,
    degree: usize,
    a: &[String],
    b: &str,
    field: &Option<FieldSpec>,
) -> Result<(LineConfig, ExpectedGroup), FamilyError> {
    if degree < 2 {
        return Err(bad("a must lie outside F_p, so the degree is at least 2"));
    }
    let k = field_or(field, || finite_field(p, degree))?;
    if k.characteristic() != p {
        return Err(bad("the field must have characteristic p"));
    }
    let b = k.parse_str(b)?;
    if b.is_zero() {
        return Err(bad("b must be nonzero"));
    }
    let a: Vec<FieldElement> = if a.is_empty() {
        vec![k.generator().ok_or_else(|| bad("the field has no generator"))?]
    } else {
        a.iter().map(|s| k.parse_str(s)).collect::<Result<_, _>>()?
    };
    if a.iter().any(|x| x.pow(p) == *x) {
        return Err(bad("every aᵢ must lie outside F_p"));
    }
    let mut mats = vec![Mat2::identity(&k)];
    mats.extend(a.iter().map(|x| Mat2::new(x.clone(), b.clone(), k.zero(), x.clone())));
    let cfg = standard_config(&k, mats)?;
    // [[x, y], [0, x]] translates by y/x; the differences with L₀ and L₁ give
    // b/aᵢ and b/(aᵢ − 1), the others are scalar
    let mut shifts = Vec::new();
    for x in &a {
        shifts.push(b.checked_div(x)?);
        shifts.push(b.checked_div(&(x - &k.one()))?);
    }
    let m = fp_rank(&k, &shifts);
    let order = (p as usize).pow(m);
    Ok((
        cfg,
        ExpectedGroup {
            order,
            label: Some(if m == 0 {
                GroupLabel::Trivial
            } else if m == 1 {
                GroupLabel::Cyclic { n: p as usize }
            } else {
                GroupLabel::ElementaryAbelian { p: p as usize, m }
            }),
        },
    ))
}

/// Dimension over `F_p` of the span of `xs`, read off prime-field coordinates.
fn fp_rank(k: &Field, xs: &[FieldElement]) -> u32 {
    let p = k.characteristic();
    let fp = finite_field(p, 1).expect("prime");
    let rows: Vec<Vec<FieldElement>> = xs
        .iter()
        .map(|x| {
            let mut c: Vec<FieldElement> = x.coefs().iter().map(|c| fp.parse_str(&c.to_string()).expect("coefficient")).collect();
            c.resize(k.degree(), fp.zero());
            c
        })
        .collect();
    if rows.is_empty() {
        return 0;
    }
    // rank = columns − dim ker of the transpose
    let cols = rows.len();
    let t: Vec<Vec<FieldElement>> = (0..k.degree()).map(|r| rows.iter().map(|row| row[r].clone()).collect()).collect();
    (cols - skewlines::exactfield::kernel(&fp, &t, cols).len()) as u32
}

/// The dilations are by `a²`, `−a` and `a`, so the quotient is `⟨a, −1⟩`; the
/// translations form a module over `F_p[a]` containing 1, hence all of it.
fn affine(p: u64, a_square: i64, field: &Option<FieldSpec>) -> Result<(LineConfig, ExpectedGroup), FamilyError> {
    if p < 3 {
        return Err(bad("p must be an odd prime"));
    }
    let fp = finite_field(p, 1)?;
    let c = fp.from_i64(a_square);
    if c.is_zero() {
        return Err(bad("a² must be nonzero"));
    }
    let k = match field {
        Some(s) => Field::new(s)?,
        None if c.sqrt()?.is_some() => fp,
        None => finite_field(p, 2)?,
    };
    if k.characteristic() != p {
        return Err(bad("the field must have characteristic p"));
    }
    let a = k
        .from_i64(a_square)
        .sqrt()?
        .ok_or_else(|| bad("a² has no square root in the field"))?;
    let m2 = Mat2::from_i64(&k, [[-1, 1], [0, -1]]);
    let m3 = Mat2::diag(a.clone(), a.inv()?);
    let cfg = standard_config(&k, vec![Mat2::identity(&k), m2, m3])?;

    let q = p.pow(degree_over_fp(&a, p)) as usize;
    let ord_a = a.mult_order(1 << 20).expect("finite field") as usize;
    // −1 is the only element of order 2, so it lies in ⟨a⟩ iff ord(a) is even
    let quotient = if ord_a % 2 == 0 { ord_a } else { 2 * ord_a };
    Ok((
        cfg,
        ExpectedGroup {
            order: q * quotient,
            label: Some(GroupLabel::Affine {
                unipotent: q,
                quotient,
            }),
        },
    ))
}

/// Degree of `F_p[a]` over `F_p`: the least `d` with `a^{p^d} = a`.
fn degree_over_fp(a: &FieldElement, p: u64) -> u32 {
    let mut x = a.pow(p);
    let mut d = 1;
    while &x != a {
        x = x.pow(p);
        d += 1;
    }
    d
}

/// The group is `⟨−ε, s⟩`, of order `lcm(6, ord(s))`.
fn c3_scaled(n: u64, field: &Option<FieldSpec>) -> Result<(LineConfig, ExpectedGroup), FamilyError> {
    if n == 1 || n == 3 {
        return Err(bad("s must be a root of unity of order other than 1 and 3"));
    }
    let k = field_or(field, || cyclotomic(lcm(3, n)))?;
    let eps = root(&k, 3)?;
    let s = root(&k, n)?;
    let one = k.one();
    let t = (&(&eps * &(&one + &s)) + &s).checked_div(&(&one - &s))?;
    let c = Mat2::diag(eps.clone(), eps.inv()?);
    let mut mats: Vec<Mat2> = (0..3).map(|j| c.pow(j)).collect();
    mats.extend((0..3).map(|j| c.pow(j).scale(&t)));
    let cfg = standard_config(&k, mats)?;
    Ok((cfg, cyclic(lcm(6, n) as usize)))
}

fn icosahedral(field: &Option<FieldSpec>) -> Result<(LineConfig, ExpectedGroup), FamilyError> {
    let k = field_or(field, || cyclotomic(20))?;
    let i = root(&k, 4)?;
    let z5 = root(&k, 5)?;
    let one = k.one();
    let half = k.from_i64(2).inv()?;
    let phi = &(&one + &z5) + &z5.pow(4);
    let pinv = phi.inv()?;
    let m2 = Mat2::new(&one + &i, &one + &i, &i - &one, &one - &i).scale(&half);
    let m3 = Mat2::new(&phi + &(&pinv * &i), one.clone(), -&one, &phi - &(&pinv * &i)).scale(&half);
    let cfg = standard_config(&k, vec![Mat2::identity(&k), m2, m3])?;
    Ok((cfg, polyhedral(60, GroupLabel::A5)))
}

fn polyhedral(order: usize, label: GroupLabel) -> ExpectedGroup {
    ExpectedGroup {
        order,
        label: Some(label),
    }
}

fn octahedral(field: &Option<FieldSpec>) -> Result<(LineConfig, ExpectedGroup), FamilyError> {
    let k = field_or(field, || cyclotomic(4))?;
    let i = root(&k, 4)?;
    let one = k.one();
    let half = k.from_i64(2).inv()?;
    let m2 = Mat2::new(&one + &i, &one + &i, &i - &one, &one - &i).scale(&half);
    let m3 = Mat2::from_i64(&k, [[0, 1], [-1, 0]]);
    let cfg = standard_config(&k, vec![Mat2::identity(&k), m2, m3])?;
    Ok((cfg, polyhedral(24, GroupLabel::S4)))
}

fn tetrahedral(a: &str, field: &Option<FieldSpec>) -> Result<(LineConfig, ExpectedGroup), FamilyError> {
    let k = field_or(field, || cyclotomic(6))?;
    let eps = root(&k, 6)?;
    let a = k.parse_str(a)?;
    if a.is_zero() {
        return Err(bad("a must be nonzero"));
    }
    let ei = eps.inv()?;
    let m2 = Mat2::new(eps.clone(), a.clone(), k.zero(), ei.clone());
    let m3 = Mat2::new(eps, k.zero(), a.inv()?, ei);
    let cfg = standard_config(&k, vec![Mat2::identity(&k), m2, m3])?;
    Ok((cfg, polyhedral(12, GroupLabel::A4)))
}
