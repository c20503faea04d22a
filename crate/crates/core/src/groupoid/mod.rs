//! The maps `F_ijk`, the group they generate inside PGL₂, and its
//! isomorphism type.

mod classify;
mod ratio;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::config::{LineConfig, LineId};
use crate::linalg2::{Mat2, ProjElem};

pub use classify::{classify, Classification, GroupLabel, Witnesses};
pub use ratio::{eigratio_check, RatioEntry, RatioReport, RatioStatus};

/// Budget used by the reference closure routine.
pub const DEFAULT_BUDGET: usize = 5000;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GroupoidError {
    #[error("indices of F_{{{0}{1}{2}}} must be distinct")]
    IndexCollision(LineId, LineId, LineId),
    #[error("line {0} is not part of the configuration")]
    MissingLine(LineId),
    #[error("the difference generators need both L0 and L∞")]
    NeedsSpecialLines,
    #[error("the closure stopped at the budget; the group may be infinite")]
    IncompleteClosure,
}

/// A triple `(i, j, k)` naming the map `f_ijk : L_i → L_j` through `L_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple {
    pub i: LineId,
    pub j: LineId,
    pub k: LineId,
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F({},{},{})", self.i, self.j, self.k)
    }
}

/// `F_ijk = [(M_j − M_k)⁻¹ (M_i − M_k)]`, with `M₀ = 0` and the limiting
/// forms `F_{ij∞} = [I]`, `F_{i∞k} = [M_i − M_k]`, `F_{∞jk} = [(M_j − M_k)⁻¹]`.
pub fn generator(cfg: &LineConfig, i: LineId, j: LineId, k: LineId) -> Result<ProjElem, GroupoidError> {
    if i == j || j == k || i == k {
        return Err(GroupoidError::IndexCollision(i, j, k));
    }
    for id in [i, j, k] {
        if !cfg.contains(id) {
            return Err(GroupoidError::MissingLine(id));
        }
    }
    let m = |id: LineId| cfg.matrix(id).expect("finite line");
    let class = |a: &Mat2| ProjElem::new(a).expect("skew lines give invertible differences");
    Ok(match (i, j, k) {
        (_, _, LineId::Infinity) => ProjElem::identity(cfg.field()),
        (_, LineId::Infinity, _) => class(&m(i).sub(&m(k))),
        (LineId::Infinity, _, _) => class(&m(j).sub(&m(k))).inv(),
        _ => {
            let mk = m(k);
            let left = m(j).sub(&mk).inv().expect("skew lines give invertible differences");
            class(&left.mul(&m(i).sub(&mk)))
        }
    })
}

/// Lifts of `F_ijk` to GL₂ (not normalized), used for eigenvalue checks.
pub(crate) fn generator_matrix(cfg: &LineConfig, t: Triple) -> Mat2 {
    let m = |id: LineId| cfg.matrix(id).expect("finite line");
    match (t.i, t.j, t.k) {
        (_, _, LineId::Infinity) => Mat2::identity(cfg.field()),
        (i, LineId::Infinity, k) => m(i).sub(&m(k)),
        (LineId::Infinity, j, k) => m(j).sub(&m(k)).inv().expect("skew"),
        (i, j, k) => {
            let mk = m(k);
            m(j).sub(&mk).inv().expect("skew").mul(&m(i).sub(&mk))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorMode {
    /// Every `F_ijk` over ordered triples of distinct lines, ∞ included.
    AllTriples,
    /// The classes `[M_i − M_j]`, `i ≠ j`, with `M₀ = 0`.
    Differences,
}

/// All ordered triples of distinct lines of `cfg`.
pub fn triples(cfg: &LineConfig) -> Vec<Triple> {
    let lines = cfg.lines();
    let mut out = Vec::new();
    for &i in &lines {
        for &j in &lines {
            for &k in &lines {
                if i != j && j != k && i != k {
                    out.push(Triple { i, j, k });
                }
            }
        }
    }
    out
}

/// Deduplicated generators in canonical order, each with the triples that
/// produce it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    provenance: BTreeMap<ProjElem, Vec<Triple>>,
}

impl GeneratorSet {
    pub fn from_elements(elements: impl IntoIterator<Item = ProjElem>) -> GeneratorSet {
        GeneratorSet {
            provenance: elements.into_iter().map(|g| (g, Vec::new())).collect(),
        }
    }

    pub fn elements(&self) -> Vec<ProjElem> {
        self.provenance.keys().cloned().collect()
    }

    pub fn provenance(&self, g: &ProjElem) -> &[Triple] {
        self.provenance.get(g).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn len(&self) -> usize {
        self.provenance.len()
    }

    pub fn is_empty(&self) -> bool {
        self.provenance.is_empty()
    }

    pub fn contains(&self, g: &ProjElem) -> bool {
        self.provenance.contains_key(g)
    }
}

pub fn generator_set(cfg: &LineConfig, mode: GeneratorMode) -> Result<GeneratorSet, GroupoidError> {
    let mut provenance: BTreeMap<ProjElem, Vec<Triple>> = BTreeMap::new();
    match mode {
        GeneratorMode::AllTriples => {
            for t in triples(cfg) {
                let g = generator(cfg, t.i, t.j, t.k)?;
                provenance.entry(g).or_default().push(t);
            }
        }
        GeneratorMode::Differences => {
            if !(cfg.has_zero() && cfg.has_infinity()) {
                return Err(GroupoidError::NeedsSpecialLines);
            }
            let finite: Vec<LineId> = cfg
                .lines()
                .into_iter()
                .filter(|&l| l != LineId::Infinity)
                .collect();
            for &i in &finite {
                for &j in &finite {
                    if i != j {
                        let t = Triple {
                            i,
                            j: LineId::Infinity,
                            k: j,
                        };
                        let g = generator(cfg, t.i, t.j, t.k)?;
                        provenance.entry(g).or_default().push(t);
                    }
                }
            }
        }
    }
    if provenance.is_empty() {
        provenance.insert(ProjElem::identity(cfg.field()), Vec::new());
    }
    Ok(GeneratorSet { provenance })
}

/// The subgroup generated by a generator set, in BFS order.
#[derive(Clone, Debug)]
pub struct GroupClosure {
    elements: Vec<ProjElem>,
    index: HashMap<ProjElem, usize>,
    generators: Vec<ProjElem>,
    budget_hit: bool,
}

impl GroupClosure {
    pub fn elements(&self) -> &[ProjElem] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn budget_hit(&self) -> bool {
        self.budget_hit
    }

    pub fn generators(&self) -> &[ProjElem] {
        &self.generators
    }

    pub fn contains(&self, g: &ProjElem) -> bool {
        self.index.contains_key(g)
    }

    pub fn index_of(&self, g: &ProjElem) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter()
            .enumerate()
            .all(|(k, a)| g[k + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// `table[a][b]` is the index of `elements[a] · elements[b]`.
    pub fn cayley(&self) -> Result<Vec<Vec<usize>>, GroupoidError> {
        if self.budget_hit {
            return Err(GroupoidError::IncompleteClosure);
        }
        Ok(self
            .elements
            .iter()
            .map(|a| {
                self.elements
                    .iter()
                    .map(|b| self.index[&a.mul(b)])
                    .collect()
            })
            .collect())
    }
}

/// Breadth-first closure: start from the identity and the generators, then
/// right-multiply every new element by every generator. Stops with
/// `budget_hit` once more than `budget` elements are found.
pub fn group_closure(gens: &GeneratorSet, budget: usize) -> GroupClosure {
    let generators = gens.elements();
    let field = generators[0].field().clone();
    let mut elements = Vec::new();
    let mut index = HashMap::new();
    let mut budget_hit = false;
    let mut push = |g: ProjElem, elements: &mut Vec<ProjElem>| -> bool {
        if index.contains_key(&g) {
            return true;
        }
        if elements.len() >= budget {
            return false;
        }
        index.insert(g.clone(), elements.len());
        elements.push(g);
        true
    };
    for g in std::iter::once(ProjElem::identity(&field)).chain(generators.iter().cloned()) {
        if !push(g, &mut elements) {
            budget_hit = true;
        }
    }
    let mut next = 0;
    'bfs: while next < elements.len() && !budget_hit {
        let g = elements[next].clone();
        next += 1;
        for s in &generators {
            if !push(g.mul(s), &mut elements) {
                budget_hit = true;
                break 'bfs;
            }
        }
    }
    let index = elements
        .iter()
        .enumerate()
        .map(|(i, g)| (g.clone(), i))
        .collect();
    GroupClosure {
        elements,
        index,
        generators,
        budget_hit,
    }
}

/// `G_L` for a configuration: closure of all `F_ijk`.
pub fn configuration_group(cfg: &LineConfig, budget: usize) -> GroupClosure {
    let gens = generator_set(cfg, GeneratorMode::AllTriples).expect("all triples always apply");
    group_closure(&gens, budget)
}
