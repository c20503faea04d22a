//! Recognition of the finite subgroups of PGL₂ that can arise here.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::linalg2::{eigenvectors, EigenReport, ProjElem, ProjPoint};

use super::{group_closure, GeneratorSet, GroupClosure, GroupoidError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupLabel {
    Trivial,
    Cyclic { n: usize },
    ElementaryAbelian { p: usize, m: u32 },
    /// Invariant factors `d₁ | d₂ | …`.
    Abelian { invariants: Vec<usize> },
    /// A group fixing a point of P¹: `unipotent` translations extended by a
    /// cyclic group of order `quotient`.
    Affine { unipotent: usize, quotient: usize },
    A4,
    S4,
    A5,
    /// Never expected for groups coming from skew lines.
    Dihedral { n: usize },
    Unknown,
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLabel::Trivial => write!(f, "trivial"),
            GroupLabel::Cyclic { n } => write!(f, "cyclic({n})"),
            GroupLabel::ElementaryAbelian { p, m } => write!(f, "elementary_abelian({p},{m})"),
            GroupLabel::Abelian { invariants } => {
                let s: Vec<String> = invariants.iter().map(|d| d.to_string()).collect();
                write!(f, "abelian({})", s.join(","))
            }
            GroupLabel::Affine {
                unipotent,
                quotient,
            } => write!(f, "affine({unipotent},{quotient})"),
            GroupLabel::A4 => write!(f, "A4"),
            GroupLabel::S4 => write!(f, "S4"),
            GroupLabel::A5 => write!(f, "A5"),
            GroupLabel::Dihedral { n } => write!(f, "dihedral({n})"),
            GroupLabel::Unknown => write!(f, "unknown"),
        }
    }
}

/// A generating pair `(r, s)` with the orders of `r`, `s` and `rs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witnesses {
    pub r: ProjElem,
    pub s: ProjElem,
    pub orders: (usize, usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub label: GroupLabel,
    pub order: usize,
    pub order_census: BTreeMap<usize, usize>,
    pub witnesses: Option<Witnesses>,
    /// A common fixed point on P¹, when one exists in the field.
    pub fixed_point: Option<ProjPoint>,
}

impl Classification {
    /// Skew lines never give a dihedral group, so this label signals a bug.
    pub fn is_violation(&self) -> bool {
        matches!(self.label, GroupLabel::Dihedral { n } if n >= 3)
    }
}

/// Element orders, by index in the closure.
fn element_orders(g: &GroupClosure) -> Vec<usize> {
    let n = g.order() as u64;
    g.elements()
        .iter()
        .map(|x| x.order(n).expect("orders divide the group order") as usize)
        .collect()
}

fn census(orders: &[usize]) -> BTreeMap<usize, usize> {
    let mut c = BTreeMap::new();
    for &o in orders {
        *c.entry(o).or_insert(0) += 1;
    }
    c
}

fn prime_factors(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Invariant factors of an abelian group from its element orders: in the
/// `p`-part `⊕ C_{p^{e_i}}` the number of `x` with `x^{p^k} = 1` is
/// `p^{Σ min(k, e_i)}`.
fn invariant_factors(order: usize, orders: &[usize]) -> Vec<usize> {
    let mut exponents_by_prime = Vec::new();
    for (p, e) in prime_factors(order) {
        let mut log_counts = vec![0u32];
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            let c = orders.iter().filter(|&&o| pk % o == 0).count();
            let mut l = 0;
            let mut v = 1;
            while v < c {
                v *= p;
                l += 1;
            }
            log_counts.push(l);
        }
        // number of cyclic factors of exponent ≥ k is log_counts[k] − log_counts[k−1]
        let at_least: Vec<u32> = (1..log_counts.len())
            .map(|k| log_counts[k] - log_counts[k - 1])
            .collect();
        let mut exps = Vec::new();
        for k in 0..at_least.len() {
            let next = at_least.get(k + 1).copied().unwrap_or(0);
            for _ in 0..(at_least[k] - next) {
                exps.push(k as u32 + 1);
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        exponents_by_prime.push((p, exps));
    }
    let rank = exponents_by_prime
        .iter()
        .map(|(_, e)| e.len())
        .max()
        .unwrap_or(0);
    let mut factors = vec![1usize; rank];
    for (p, exps) in &exponents_by_prime {
        for (slot, e) in exps.iter().enumerate() {
            factors[slot] *= p.pow(*e);
        }
    }
    factors.reverse();
    factors
}

/// A point fixed by every generator, if one lies in the field.
fn common_fixed_point(g: &GroupClosure) -> Option<ProjPoint> {
    let nontrivial: Vec<&ProjElem> = g.generators().iter().filter(|x| !x.is_identity()).collect();
    let first = nontrivial.first()?;
    let candidates = match eigenvectors(first.rep()) {
        EigenReport::Split { pairs } => pairs.into_iter().map(|(_, v)| v).collect(),
        _ => Vec::new(),
    };
    candidates
        .into_iter()
        .find(|v| nontrivial.iter().all(|x| x.fixes(v)))
}

/// `tr² = 4 det`: a single eigenvalue.
fn is_unipotent_class(x: &ProjElem) -> bool {
    let m = x.rep();
    let t = m.trace();
    (&(&t * &t) - &(&m.field().from_i64(4) * &m.det())).is_zero()
}

fn generates(order: usize, r: &ProjElem, s: &ProjElem, budget: usize) -> bool {
    let gens = GeneratorSet::from_elements([r.clone(), s.clone()]);
    let h = group_closure(&gens, budget);
    !h.budget_hit() && h.order() == order
}

/// Exhaustive search for `(r, s)` of orders `(a, b)` with `rs` of order `c`
/// generating the whole group.
fn presentation(
    g: &GroupClosure,
    orders: &[usize],
    (a, b, c): (usize, usize, usize),
) -> Option<Witnesses> {
    let els = g.elements();
    for (ri, r) in els.iter().enumerate() {
        if orders[ri] != a {
            continue;
        }
        for (si, s) in els.iter().enumerate() {
            if orders[si] != b {
                continue;
            }
            let rs = r.mul(s);
            if orders[g.index_of(&rs).expect("closed")] == c && generates(g.order(), r, s, g.order())
            {
                return Some(Witnesses {
                    r: r.clone(),
                    s: s.clone(),
                    orders: (a, b, c),
                });
            }
        }
    }
    None
}

fn census_of(pairs: &[(usize, usize)]) -> BTreeMap<usize, usize> {
    pairs.iter().copied().collect()
}

pub fn classify(g: &GroupClosure) -> Result<Classification, GroupoidError> {
    if g.budget_hit() {
        return Err(GroupoidError::IncompleteClosure);
    }
    let n = g.order();
    let orders = element_orders(g);
    let order_census = census(&orders);
    let mut out = Classification {
        label: GroupLabel::Unknown,
        order: n,
        order_census: order_census.clone(),
        witnesses: None,
        fixed_point: common_fixed_point(g),
    };
    if n == 1 {
        out.label = GroupLabel::Trivial;
        return Ok(out);
    }
    if g.is_abelian() {
        out.label = if order_census.contains_key(&n) {
            GroupLabel::Cyclic { n }
        } else {
            let inv = invariant_factors(n, &orders);
            let factors = prime_factors(n);
            if factors.len() == 1 && inv.iter().all(|&d| d == factors[0].0) {
                GroupLabel::ElementaryAbelian {
                    p: factors[0].0,
                    m: factors[0].1,
                }
            } else {
                GroupLabel::Abelian { invariants: inv }
            }
        };
        return Ok(out);
    }
    if out.fixed_point.is_some() {
        let unipotent = g.elements().iter().filter(|x| is_unipotent_class(x)).count();
        out.label = GroupLabel::Affine {
            unipotent,
            quotient: n / unipotent,
        };
        return Ok(out);
    }
    let polyhedral = [
        (12, GroupLabel::A4, vec![(1, 1), (2, 3), (3, 8)], (3, 2, 3)),
        (24, GroupLabel::S4, vec![(1, 1), (2, 9), (3, 8), (4, 6)], (3, 2, 4)),
        (60, GroupLabel::A5, vec![(1, 1), (2, 15), (3, 20), (5, 24)], (3, 5, 2)),
    ];
    for (size, label, expected, rel) in polyhedral {
        if n == size && order_census == census_of(&expected) {
            if let Some(w) = presentation(g, &orders, rel) {
                out.label = label;
                out.witnesses = Some(w);
                return Ok(out);
            }
        }
    }
    if n % 2 == 0 && n >= 6 {
        let half = n / 2;
        if let Some(ri) = orders.iter().position(|&o| o == half) {
            let r = &g.elements()[ri];
            let rotations: Vec<ProjElem> = (0..half as u64).map(|k| r.pow(k)).collect();
            let reflections_ok = g
                .elements()
                .iter()
                .zip(&orders)
                .all(|(x, &o)| rotations.contains(x) || o == 2);
            if reflections_ok {
                out.label = GroupLabel::Dihedral { n: half };
                let s = g
                    .elements()
                    .iter()
                    .find(|x| !rotations.contains(x))
                    .expect("index 2")
                    .clone();
                let rs = r.mul(&s);
                out.witnesses = Some(Witnesses {
                    r: r.clone(),
                    s,
                    orders: (half, 2, rs.order(n as u64).unwrap_or(0) as usize),
                });
            }
        }
    }
    Ok(out)
}
