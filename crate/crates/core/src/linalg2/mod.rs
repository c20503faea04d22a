//! 2×2 matrices, their classes in PGL₂, points of P¹ and eigenlines.

mod eigen;

use std::fmt;

use crate::exactfield::{ElementCode, Field, FieldElement, FieldError};

pub use eigen::{eigenvectors, EigenReport};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is zero")]
    ZeroMatrix,
    #[error("point has both coordinates zero")]
    ZeroPoint,
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// JSON form `[["a11","a12"],["a21","a22"]]`.
pub type MatrixCode = [[ElementCode; 2]; 2];

/// A 2×2 matrix, entries in row-major order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2 {
    e: [FieldElement; 4],
}

impl Mat2 {
    pub fn new(a11: FieldElement, a12: FieldElement, a21: FieldElement, a22: FieldElement) -> Mat2 {
        let f = a11.field();
        assert!(
            a12.field().same(f) && a21.field().same(f) && a22.field().same(f),
            "matrix entries belong to different fields"
        );
        Mat2 {
            e: [a11, a12, a21, a22],
        }
    }

    pub fn try_new(
        a11: FieldElement,
        a12: FieldElement,
        a21: FieldElement,
        a22: FieldElement,
    ) -> Result<Mat2, LinalgError> {
        let f = a11.field();
        if !(a12.field().same(f) && a21.field().same(f) && a22.field().same(f)) {
            return Err(FieldError::MixedFields.into());
        }
        Ok(Mat2::new(a11, a12, a21, a22))
    }

    pub fn identity(field: &Field) -> Mat2 {
        Mat2::scalar(&field.one())
    }

    pub fn zero(field: &Field) -> Mat2 {
        Mat2::scalar(&field.zero())
    }

    pub fn scalar(l: &FieldElement) -> Mat2 {
        let z = l.field().zero();
        Mat2::new(l.clone(), z.clone(), z, l.clone())
    }

    pub fn diag(a: FieldElement, d: FieldElement) -> Mat2 {
        let z = a.field().zero();
        Mat2::new(a, z.clone(), z, d)
    }

    pub fn from_i64(field: &Field, v: [[i64; 2]; 2]) -> Mat2 {
        Mat2::new(
            field.from_i64(v[0][0]),
            field.from_i64(v[0][1]),
            field.from_i64(v[1][0]),
            field.from_i64(v[1][1]),
        )
    }

    pub fn from_code(field: &Field, code: &MatrixCode) -> Result<Mat2, FieldError> {
        Ok(Mat2::new(
            field.parse_code(&code[0][0])?,
            field.parse_code(&code[0][1])?,
            field.parse_code(&code[1][0])?,
            field.parse_code(&code[1][1])?,
        ))
    }

    pub fn to_code(&self) -> MatrixCode {
        [
            [self.e[0].to_code(), self.e[1].to_code()],
            [self.e[2].to_code(), self.e[3].to_code()],
        ]
    }

    pub fn field(&self) -> &Field {
        self.e[0].field()
    }

    pub fn entries(&self) -> &[FieldElement; 4] {
        &self.e
    }

    pub fn a(&self) -> &FieldElement {
        &self.e[0]
    }
    pub fn b(&self) -> &FieldElement {
        &self.e[1]
    }
    pub fn c(&self) -> &FieldElement {
        &self.e[2]
    }
    pub fn d(&self) -> &FieldElement {
        &self.e[3]
    }

    pub fn det(&self) -> FieldElement {
        &(&self.e[0] * &self.e[3]) - &(&self.e[1] * &self.e[2])
    }

    pub fn trace(&self) -> FieldElement {
        &self.e[0] + &self.e[3]
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(FieldElement::is_zero)
    }

    pub fn is_scalar(&self) -> bool {
        self.e[1].is_zero() && self.e[2].is_zero() && self.e[0] == self.e[3]
    }

    pub fn is_identity(&self) -> bool {
        self.is_scalar() && self.e[0].is_one()
    }

    pub fn is_invertible(&self) -> bool {
        !self.det().is_zero()
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let [a, b, c, d] = &self.e;
        let [p, q, r, s] = &o.e;
        Mat2::new(
            &(a * p) + &(b * r),
            &(a * q) + &(b * s),
            &(c * p) + &(d * r),
            &(c * q) + &(d * s),
        )
    }

    pub fn add(&self, o: &Mat2) -> Mat2 {
        Mat2 {
            e: std::array::from_fn(|i| &self.e[i] + &o.e[i]),
        }
    }

    pub fn sub(&self, o: &Mat2) -> Mat2 {
        Mat2 {
            e: std::array::from_fn(|i| &self.e[i] - &o.e[i]),
        }
    }

    pub fn scale(&self, l: &FieldElement) -> Mat2 {
        Mat2 {
            e: std::array::from_fn(|i| &self.e[i] * l),
        }
    }

    pub fn neg(&self) -> Mat2 {
        Mat2 {
            e: std::array::from_fn(|i| -&self.e[i]),
        }
    }

    /// `[[d, −b], [−c, a]]`, so that `m · adj(m) = det(m) · I`.
    pub fn adjugate(&self) -> Mat2 {
        let [a, b, c, d] = &self.e;
        Mat2::new(d.clone(), -b, -c, a.clone())
    }

    pub fn inv(&self) -> Result<Mat2, LinalgError> {
        let det = self.det();
        let di = det.inv().map_err(|_| LinalgError::SingularMatrix)?;
        Ok(self.adjugate().scale(&di))
    }

    /// `AB − BA`.
    pub fn commutator(&self, o: &Mat2) -> Mat2 {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn pow(&self, mut n: u64) -> Mat2 {
        let mut acc = Mat2::identity(self.field());
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    /// Image of the column vector `(x, y)`.
    pub fn apply(&self, x: &FieldElement, y: &FieldElement) -> (FieldElement, FieldElement) {
        let [a, b, c, d] = &self.e;
        (&(a * x) + &(b * y), &(c * x) + &(d * y))
    }

    /// A basis vector of the kernel, when the matrix is singular and nonzero.
    pub fn kernel_line(&self) -> Option<ProjPoint> {
        if !self.det().is_zero() || self.is_zero() {
            return None;
        }
        let [a, b, c, d] = &self.e;
        if !a.is_zero() || !b.is_zero() {
            ProjPoint::new(b.clone(), -a).ok()
        } else {
            ProjPoint::new(d.clone(), -c).ok()
        }
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.e[0], self.e[1], self.e[2], self.e[3]
        )
    }
}

/// An element of PGL₂: an invertible matrix scaled so that its first nonzero
/// entry in row-major order is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjElem {
    rep: Mat2,
}

impl ProjElem {
    pub fn new(m: &Mat2) -> Result<ProjElem, LinalgError> {
        if m.is_zero() {
            return Err(LinalgError::ZeroMatrix);
        }
        if !m.is_invertible() {
            return Err(LinalgError::SingularMatrix);
        }
        Ok(ProjElem {
            rep: normalize(m),
        })
    }

    pub fn identity(field: &Field) -> ProjElem {
        ProjElem {
            rep: Mat2::identity(field),
        }
    }

    pub fn rep(&self) -> &Mat2 {
        &self.rep
    }

    pub fn field(&self) -> &Field {
        self.rep.field()
    }

    pub fn is_identity(&self) -> bool {
        self.rep.is_identity()
    }

    pub fn mul(&self, o: &ProjElem) -> ProjElem {
        ProjElem {
            rep: normalize(&self.rep.mul(&o.rep)),
        }
    }

    pub fn try_mul(&self, o: &ProjElem) -> Result<ProjElem, LinalgError> {
        if !self.field().same(o.field()) {
            return Err(FieldError::MixedFields.into());
        }
        Ok(self.mul(o))
    }

    pub fn inv(&self) -> ProjElem {
        ProjElem {
            rep: normalize(&self.rep.adjugate()),
        }
    }

    pub fn pow(&self, n: u64) -> ProjElem {
        ProjElem {
            rep: normalize(&self.rep.pow(n)),
        }
    }

    /// Least `n ≤ bound` with `gⁿ = 1`.
    pub fn order(&self, bound: u64) -> Option<u64> {
        let mut acc = self.clone();
        for n in 1..=bound {
            if acc.is_identity() {
                return Some(n);
            }
            acc = acc.mul(self);
        }
        None
    }

    pub fn commutes_with(&self, o: &ProjElem) -> bool {
        self.mul(o) == o.mul(self)
    }

    /// Möbius action `t ↦ (a t + b)/(c t + d)` on `t = x/y`.
    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        let (x, y) = self.rep.apply(&p.x, &p.y);
        ProjPoint::new(x, y).expect("invertible maps send points to points")
    }

    pub fn try_apply(&self, p: &ProjPoint) -> Result<ProjPoint, LinalgError> {
        if !self.field().same(p.x.field()) {
            return Err(FieldError::MixedFields.into());
        }
        Ok(self.apply(p))
    }

    pub fn fixes(&self, p: &ProjPoint) -> bool {
        self.apply(p) == *p
    }

    /// `tr²/det`, a conjugation- and scale-invariant of the class.
    pub fn trace_invariant(&self) -> FieldElement {
        let t = self.rep.trace();
        &(&t * &t) * &self.rep.det().inv().expect("invertible")
    }
}

impl fmt::Display for ProjElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

fn normalize(m: &Mat2) -> Mat2 {
    let lead = m
        .e
        .iter()
        .find(|x| !x.is_zero())
        .expect("nonzero matrix");
    if lead.is_one() {
        return m.clone();
    }
    m.scale(&lead.inv().expect("nonzero"))
}

pub fn proj_normalize(m: &Mat2) -> Result<ProjElem, LinalgError> {
    ProjElem::new(m)
}

pub fn moebius_apply(g: &ProjElem, p: &ProjPoint) -> Result<ProjPoint, LinalgError> {
    g.try_apply(p)
}

pub fn proj_order(g: &ProjElem, bound: u64) -> Option<u64> {
    g.order(bound)
}

/// A point `[x : y]` of P¹ with first nonzero coordinate 1. The affine
/// coordinate is `t = x/y`, so `[1 : 0]` is `t = ∞` and `[0 : 1]` is `t = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    x: FieldElement,
    y: FieldElement,
}

impl ProjPoint {
    pub fn new(x: FieldElement, y: FieldElement) -> Result<ProjPoint, LinalgError> {
        if !x.field().same(y.field()) {
            return Err(FieldError::MixedFields.into());
        }
        if !x.is_zero() {
            if x.is_one() {
                return Ok(ProjPoint { x, y });
            }
            let xi = x.inv()?;
            Ok(ProjPoint {
                y: &y * &xi,
                x: x.field().one(),
            })
        } else if !y.is_zero() {
            Ok(ProjPoint {
                x,
                y: y.field().one(),
            })
        } else {
            Err(LinalgError::ZeroPoint)
        }
    }

    pub fn infinity(field: &Field) -> ProjPoint {
        ProjPoint {
            x: field.one(),
            y: field.zero(),
        }
    }

    /// The point with affine coordinate `t`.
    pub fn affine(t: &FieldElement) -> ProjPoint {
        ProjPoint::new(t.clone(), t.field().one()).expect("y = 1")
    }

    pub fn x(&self) -> &FieldElement {
        &self.x
    }

    pub fn y(&self) -> &FieldElement {
        &self.y
    }

    pub fn field(&self) -> &Field {
        self.x.field()
    }

    pub fn is_infinity(&self) -> bool {
        self.y.is_zero()
    }

    /// `x/y`, or `None` at infinity.
    pub fn t(&self) -> Option<FieldElement> {
        self.y.inv().ok().map(|yi| &self.x * &yi)
    }

    pub fn to_code(&self) -> [ElementCode; 2] {
        [self.x.to_code(), self.y.to_code()]
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.x, self.y)
    }
}

#[cfg(test)]
mod tests;
