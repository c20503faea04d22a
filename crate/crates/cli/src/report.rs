//! The analysis pipeline and the JSON shapes of its reports.

use std::collections::BTreeMap;

use serde::Serialize;

use skewlines::config::{AbelianReport, LineConfig, LineId, TransversalMethod, ValidationReport};
use skewlines::exactfield::FieldSpec;
use skewlines::groupoid::{
    classify, eigratio_check, generator_set, group_closure, Classification, GeneratorMode, GroupClosure,
    GroupLabel, GroupoidError, RatioReport, Triple,
};
use skewlines::linalg2::{MatrixCode, ProjElem, ProjPoint};
use skewlines::orbits::{generic_seed, orbit_full, orbit_geometric, OrbitError, OrbitReport, P3Point};

use crate::family::ExpectedGroup;

pub const SCHEMA_VERSION: u32 = 1;

/// Bound on the ratio orders reported by `eigratio_check`.
pub const RATIO_BOUND: u64 = 1000;

#[derive(Clone, Debug, Serialize)]
pub struct TransversalOut {
    pub exists: bool,
    pub infinitely_many: bool,
    /// Coordinates `v` of the transversal through `(v, 0)` and `(0, M₁v)`.
    pub witnesses: Vec<String>,
    pub method: TransversalMethod,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessOut {
    pub r: MatrixCode,
    pub s: MatrixCode,
    pub orders: [usize; 3],
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupOut {
    pub order: usize,
    pub budget_hit: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<GroupLabel>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label_text: Option<String>,
    pub order_census: BTreeMap<usize, usize>,
    pub witnesses: Option<WitnessOut>,
    pub fixed_point: Option<String>,
    /// A dihedral group, which skew lines should never produce.
    pub violation: bool,
}

impl GroupOut {
    pub fn new(g: &GroupClosure) -> GroupOut {
        match classify(g) {
            Ok(c) => GroupOut::classified(g, &c),
            Err(_) => GroupOut {
                order: g.order(),
                budget_hit: g.budget_hit(),
                label: None,
                label_text: None,
                order_census: BTreeMap::new(),
                witnesses: None,
                fixed_point: None,
                violation: false,
            },
        }
    }

    fn classified(g: &GroupClosure, c: &Classification) -> GroupOut {
        GroupOut {
            order: g.order(),
            budget_hit: false,
            label: Some(c.label.clone()),
            label_text: Some(c.label.to_string()),
            order_census: c.order_census.clone(),
            witnesses: c.witnesses.as_ref().map(|w| WitnessOut {
                r: w.r.rep().to_code(),
                s: w.s.rep().to_code(),
                orders: [w.orders.0, w.orders.1, w.orders.2],
            }),
            fixed_point: c.fixed_point.as_ref().map(ProjPoint::to_string),
            violation: c.is_violation(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorOut {
    pub element: MatrixCode,
    pub triples: Vec<Triple>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitOut {
    pub seed: String,
    pub carrier: LineId,
    pub total_size: usize,
    pub per_line_sizes: BTreeMap<LineId, usize>,
    pub stabilizer_order: Option<usize>,
    pub truncated: bool,
    pub points: BTreeMap<LineId, Vec<String>>,
}

impl From<&OrbitReport> for OrbitOut {
    fn from(r: &OrbitReport) -> OrbitOut {
        OrbitOut {
            seed: r.seed.to_string(),
            carrier: r.carrier,
            total_size: r.total_size,
            per_line_sizes: r.per_line_sizes.clone(),
            stabilizer_order: r.stabilizer_order,
            truncated: r.truncated,
            points: r
                .points
                .iter()
                .map(|(l, ps)| (*l, ps.iter().map(P3Point::to_string).collect()))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub field: FieldSpec,
    pub lines: Vec<LineId>,
    pub validation: ValidationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transversals: Option<TransversalOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abelian: Option<AbelianReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<GeneratorOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratios: Option<RatioReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub orbits: Vec<OrbitOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<ExpectedGroup>,
    /// Whether the group matches `expected`, when both are known.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches_expected: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct Options {
    pub budget: usize,
    pub mode: GeneratorMode,
    /// Seeds for orbit reports; `None` asks for a generic point of `L∞`.
    pub seeds: Vec<Option<P3Point>>,
    pub orbit_budget: Option<usize>,
    pub oracle: bool,
}

impl Default for Options {
    fn default() -> Options {
        Options {
            budget: skewlines::groupoid::DEFAULT_BUDGET,
            mode: GeneratorMode::AllTriples,
            seeds: Vec::new(),
            orbit_budget: None,
            oracle: false,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum AnalysisError {
    #[error("generators: {0}")]
    Groupoid(#[from] GroupoidError),
    #[error("orbit: {0}")]
    Orbit(#[from] OrbitError),
}

pub fn transversals(cfg: &LineConfig) -> TransversalOut {
    let t = cfg.transversal_compute();
    TransversalOut {
        exists: t.exists,
        infinitely_many: t.infinitely_many,
        witnesses: t.witnesses.iter().map(ProjPoint::to_string).collect(),
        method: t.method,
    }
}

pub fn generators(cfg: &LineConfig, mode: GeneratorMode) -> Result<Vec<GeneratorOut>, GroupoidError> {
    let gens = generator_set(cfg, mode)?;
    Ok(gens
        .elements()
        .iter()
        .map(|g| GeneratorOut {
            element: g.rep().to_code(),
            triples: gens.provenance(g).to_vec(),
        })
        .collect())
}

pub fn closure(cfg: &LineConfig, mode: GeneratorMode, budget: usize) -> Result<GroupClosure, GroupoidError> {
    Ok(group_closure(&generator_set(cfg, mode)?, budget))
}

/// Default orbit budget: ten times `|G|` per line, or 100 000 without a group.
pub fn orbit_budget(cfg: &LineConfig, g: &GroupClosure) -> usize {
    if g.budget_hit() {
        100_000
    } else {
        10 * g.order() * cfg.lines().len()
    }
}

/// The generic point of `L∞` (or of the first line when `L∞` is absent).
pub fn generic_point(cfg: &LineConfig, g: &GroupClosure) -> Result<P3Point, OrbitError> {
    let v = generic_seed(g)?;
    let line = if cfg.has_infinity() {
        LineId::Infinity
    } else {
        cfg.lines()[0]
    };
    skewlines::orbits::point_on_line(cfg, line, &v)
}

pub fn orbit(
    cfg: &LineConfig,
    g: &GroupClosure,
    seed: &P3Point,
    budget: usize,
    oracle: bool,
) -> Result<OrbitReport, OrbitError> {
    let r = if oracle {
        orbit_geometric(cfg, seed, budget)?
    } else {
        orbit_full(cfg, seed, budget)?
    };
    if g.budget_hit() || r.truncated {
        Ok(r)
    } else {
        r.with_group(g)
    }
}

/// Validation, transversals, abelian prediction, generators, closure,
/// classification, ratio orders and orbits, in that order. Stops after
/// validation when the lines are not skew.
pub fn analyze(cfg: &LineConfig, opts: &Options, expected: Option<ExpectedGroup>) -> Result<AnalysisReport, AnalysisError> {
    let validation = cfg.validate();
    let mut report = AnalysisReport {
        schema_version: SCHEMA_VERSION,
        field: cfg.field().spec().clone(),
        lines: cfg.lines(),
        validation,
        transversals: None,
        abelian: None,
        generators: Vec::new(),
        group: None,
        ratios: None,
        orbits: Vec::new(),
        expected: expected.clone(),
        matches_expected: None,
    };
    if !report.validation.valid {
        return Ok(report);
    }
    report.transversals = Some(transversals(cfg));
    report.abelian = Some(cfg.predict_abelian());
    report.generators = generators(cfg, opts.mode)?;
    let g = closure(cfg, opts.mode, opts.budget)?;
    let group = GroupOut::new(&g);
    report.matches_expected = expected.map(|e| {
        !group.budget_hit && e.order == group.order && e.label.is_none_or(|l| Some(l) == group.label)
    });
    report.group = Some(group);
    report.ratios = Some(eigratio_check(cfg, RATIO_BOUND));
    let budget = opts.orbit_budget.unwrap_or_else(|| orbit_budget(cfg, &g));
    for seed in &opts.seeds {
        let seed = match seed {
            Some(p) => p.clone(),
            None => generic_point(cfg, &g)?,
        };
        report.orbits.push(OrbitOut::from(&orbit(cfg, &g, &seed, budget, opts.oracle)?));
    }
    Ok(report)
}

/// Elements of a closure as matrix codes, in closure order.
pub fn element_codes(g: &GroupClosure) -> Vec<MatrixCode> {
    g.elements().iter().map(|x: &ProjElem| x.rep().to_code()).collect()
}
