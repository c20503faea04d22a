//! Eigenvalues and eigenlines of 2×2 matrices.

use crate::exactfield::FieldElement;

use super::{Mat2, ProjPoint};

/// Eigen-data of a 2×2 matrix over its field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EigenReport {
    /// Scalar matrix: every line is an eigenline.
    Scalar { value: FieldElement },
    /// Eigenvalues in the field with their eigenlines: two pairs for distinct
    /// eigenvalues, one pair for a nontrivial Jordan block.
    Split { pairs: Vec<(FieldElement, ProjPoint)> },
    /// The characteristic polynomial has no root in the field; `disc` is its
    /// discriminant.
    ExtensionRequired { disc: FieldElement },
    /// Whether the discriminant is a square could not be decided here.
    Unresolved { disc: FieldElement },
}

impl EigenReport {
    pub fn eigenlines(&self) -> Vec<ProjPoint> {
        match self {
            EigenReport::Split { pairs } => pairs.iter().map(|(_, v)| v.clone()).collect(),
            _ => Vec::new(),
        }
    }
}

fn eigenline(m: &Mat2, l: &FieldElement) -> ProjPoint {
    let [a, b, c, d] = m.entries();
    let field = m.field();
    if !b.is_zero() {
        ProjPoint::new(b.clone(), l - a).expect("b ≠ 0")
    } else if !c.is_zero() {
        ProjPoint::new(l - d, c.clone()).expect("c ≠ 0")
    } else if l == a {
        ProjPoint::infinity(field)
    } else {
        ProjPoint::affine(&field.zero())
    }
}

fn split(m: &Mat2, l1: FieldElement, l2: FieldElement) -> EigenReport {
    let mut pairs = vec![(l1.clone(), eigenline(m, &l1))];
    if l1 != l2 {
        pairs.push((l2.clone(), eigenline(m, &l2)));
    }
    EigenReport::Split { pairs }
}

pub fn eigenvectors(m: &Mat2) -> EigenReport {
    let field = m.field();
    if m.is_scalar() {
        return EigenReport::Scalar { value: m.a().clone() };
    }
    let [a, b, c, d] = m.entries();
    if c.is_zero() || b.is_zero() {
        return split(m, a.clone(), d.clone());
    }
    let t = m.trace();
    let det = m.det();
    if field.characteristic() == 2 {
        // λ² + tλ + det = 0
        if t.is_zero() {
            let l = det.sqrt().ok().flatten().expect("squaring is onto in characteristic 2");
            return split(m, l.clone(), l);
        }
        let rhs = &det * &(&t * &t).inv().expect("t ≠ 0");
        // λ = tμ with μ² + μ = det/t²
        return match rhs.artin_schreier_root() {
            Some(mu) => {
                let l1 = &t * &mu;
                let l2 = &l1 + &t;
                split(m, l1, l2)
            }
            None => EigenReport::ExtensionRequired { disc: rhs },
        };
    }
    let disc = &(&t * &t) - &(&field.from_i64(4) * &det);
    let half = field.from_i64(2).inv().expect("characteristic ≠ 2");
    match disc.sqrt() {
        Ok(Some(r)) => split(m, &(&t + &r) * &half, &(&t - &r) * &half),
        Ok(None) => EigenReport::ExtensionRequired { disc },
        Err(_) => EigenReport::Unresolved { disc },
    }
}
