//! Parameter sweeps over two open families. Rows are reported as found; no
//! claim is made about completeness.

use rayon::prelude::*;
use serde::Serialize;

use skewlines::config::LineConfig;
use skewlines::exactfield::{cyclotomic_field, Field, FieldElement};
use skewlines::groupoid::{configuration_group, eigratio_check};
use skewlines::linalg2::Mat2;

#[derive(Clone, Debug, Serialize)]
pub struct SearchRow {
    pub params: Vec<String>,
    pub skew: bool,
    /// Some generator has infinite order.
    pub infinite: bool,
    /// Closure order, when the closure finished within the budget.
    pub order: Option<usize>,
}

/// Scalars `ζ_m^k · r` for `r` in the given rationals.
fn candidates(k: &Field, z: &FieldElement, m: u64, scalars: &[String]) -> Vec<(String, FieldElement)> {
    let mut out = Vec::new();
    for r in scalars {
        let Ok(r) = k.parse_str(r) else { continue };
        for j in 0..m {
            let t = &z.pow(j) * &r;
            out.push((t.to_string(), t));
        }
    }
    out
}

fn row(cfg: Option<LineConfig>, params: Vec<String>, budget: usize) -> SearchRow {
    let Some(cfg) = cfg else {
        return SearchRow {
            params,
            skew: false,
            infinite: false,
            order: None,
        };
    };
    let infinite = eigratio_check(&cfg, 1000).infinite;
    let order = if infinite {
        None
    } else {
        let g = configuration_group(&cfg, budget);
        (!g.budget_hit()).then(|| g.order())
    };
    SearchRow {
        params,
        skew: true,
        infinite,
        order,
    }
}

/// `{L₀, L∞} ∪ C̃ₙ ∪ tC̃ₙ` over `Q(ζ_m)` for `t = ζ_m^k r`.
pub fn scaled(n: u64, m: u64, scalars: &[String], budget: usize) -> Vec<SearchRow> {
    let m = if m % n == 0 { m } else { m * n };
    let (k, z) = cyclotomic_field(m);
    let eps = z.pow(m / n);
    let c = Mat2::diag(eps.clone(), eps.inv().expect("unit"));
    let base: Vec<Mat2> = (0..n).map(|j| c.pow(j)).collect();
    candidates(&k, &z, m, scalars)
        .into_par_iter()
        .map(|(label, t)| {
            let mut mats = base.clone();
            mats.extend(base.iter().map(|b| b.scale(&t)));
            let cfg = LineConfig::new(&k, true, true, mats).ok();
            row(cfg, vec![format!("n={n}"), format!("t={label}")], budget)
        })
        .collect()
}

/// `{L₀, L∞, I, diag(a₂, d₂), diag(a₃, d₃)}` with entries among `ζ_m^k r`,
/// listing each unordered pair of lines once.
pub fn diagonal(m: u64, scalars: &[String], budget: usize) -> Vec<SearchRow> {
    let (k, z) = cyclotomic_field(m);
    let vals = candidates(&k, &z, m, scalars);
    let mut pairs = Vec::new();
    for (la, a) in &vals {
        for (ld, d) in &vals {
            pairs.push((format!("({la}, {ld})"), Mat2::diag(a.clone(), d.clone())));
        }
    }
    let mut jobs = Vec::new();
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            jobs.push((i, j));
        }
    }
    jobs.into_par_iter()
        .filter_map(|(i, j)| {
            let mats = vec![Mat2::identity(&k), pairs[i].1.clone(), pairs[j].1.clone()];
            let cfg = LineConfig::new(&k, true, true, mats).ok()?;
            let r = row(Some(cfg), vec![pairs[i].0.clone(), pairs[j].0.clone()], budget);
            (!r.infinite).then_some(r)
        })
        .collect()
}
