//! Finite-order test for the generators through their eigenvalue ratios.
//!
//! With `ρ = λ₁/λ₂` and `κ = tr²/det = ρ + 2 + ρ⁻¹`, put `s = κ − 2`. The
//! Dickson recurrence `D₀ = 2, D₁ = s, D_{n+1} = s D_n − D_{n−1}` gives
//! `D_n(s) = ρⁿ + ρ⁻ⁿ`, and `ρⁿ + ρ⁻ⁿ = 2` exactly when `ρⁿ = 1`. So the order
//! of `ρ` is read off in the field of definition even when the eigenvalues
//! themselves are not in it.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::config::LineConfig;
use crate::linalg2::{Mat2, ProjElem};

use super::{generator_matrix, triples, Triple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RatioStatus {
    /// `F_ijk` is the identity.
    Identity,
    /// The ratio has this multiplicative order.
    Order { n: u64 },
    /// A root of unity of order above the bound.
    AboveBound,
    /// Certified not a root of unity, so `F_ijk` has infinite order.
    NotRootOfUnity,
    /// A single eigenvalue with a nontrivial Jordan block: order `p` in
    /// characteristic `p`, infinite in characteristic 0.
    Unipotent { order: Option<u64> },
}

impl RatioStatus {
    pub fn proves_infinite(&self) -> bool {
        matches!(
            self,
            RatioStatus::NotRootOfUnity | RatioStatus::Unipotent { order: None }
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioEntry {
    pub triple: Triple,
    /// Whether the eigenvalues lie in the field of the configuration.
    pub eigenvalues_in_field: bool,
    #[serde(flatten)]
    pub status: RatioStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioReport {
    pub entries: Vec<RatioEntry>,
    /// Some generator has infinite order.
    pub infinite: bool,
}

pub fn eigratio_check(cfg: &LineConfig, bound: u64) -> RatioReport {
    let field = cfg.field();
    let char_p = field.characteristic();
    // in characteristic 0 a root of unity in a quadratic extension of K has
    // order n with φ(n) ≤ 2[K:Q], hence n ≤ 2·(2[K:Q])²
    let certify = if char_p == 0 {
        let d = 2 * field.degree() as u64;
        Some(2 * d * d)
    } else {
        None
    };
    // past the certified bound nothing is a root of unity, and the recurrence
    // values only grow
    let limit = certify.unwrap_or(bound);
    // both results depend only on the class of F_ijk, and many triples share one
    let mut seen: HashMap<ProjElem, (RatioStatus, bool)> = HashMap::new();
    let mut entries = Vec::new();
    for t in triples(cfg) {
        let m = generator_matrix(cfg, t);
        let class = ProjElem::new(&m).expect("invertible");
        let (status, eigenvalues_in_field) = *seen
            .entry(class)
            .or_insert_with_key(|c| ratio_status(c.rep(), char_p, certify, limit, bound));
        entries.push(RatioEntry {
            triple: t,
            eigenvalues_in_field,
            status,
        });
    }
    let infinite = entries.iter().any(|e| e.status.proves_infinite());
    RatioReport { entries, infinite }
}

fn ratio_status(m: &Mat2, char_p: u64, certify: Option<u64>, limit: u64, bound: u64) -> (RatioStatus, bool) {
    let field = m.field();
    let tr = m.trace();
    let det = m.det();
    let disc = &(&tr * &tr) - &(&field.from_i64(4) * &det);
    let status = if m.is_scalar() {
        RatioStatus::Identity
    } else if disc.is_zero() {
        RatioStatus::Unipotent {
            order: (char_p != 0).then_some(char_p),
        }
    } else {
        let s = &(&(&tr * &tr) * &det.inv().expect("invertible")) - &field.from_i64(2);
        let two = field.from_i64(2);
        let (mut prev, mut cur) = (two.clone(), s.clone());
        let mut found = None;
        for n in 1..=limit {
            if cur == two {
                found = Some(n);
                break;
            }
            let next = &(&s * &cur) - &prev;
            prev = cur;
            cur = next;
        }
        match found {
            Some(n) if n <= bound => RatioStatus::Order { n },
            Some(_) => RatioStatus::AboveBound,
            None if certify.is_some() => RatioStatus::NotRootOfUnity,
            None => RatioStatus::AboveBound,
        }
    };
    let in_field = disc.is_zero() || matches!(disc.sqrt(), Ok(Some(_)));
    (status, in_field)
}
