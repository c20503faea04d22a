//! Orbits of points of the configuration under the groupoid maps.
//!
//! A point of `L_i` is `(v, M_i v)`, of `L₀` is `(v, 0)` and of `L∞` is
//! `(0, v)`; `v ∈ P¹` is its coordinate on the line.

mod geometric;

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use crate::config::{LineConfig, LineId};
use crate::exactfield::{ElementCode, Field, FieldElement, FieldError};
use crate::groupoid::{generator, triples, GroupClosure, GroupoidError};
use crate::linalg2::{ProjElem, ProjPoint};

pub use geometric::orbit_geometric;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum OrbitError {
    #[error("line {0} is not part of the configuration")]
    InvalidIndex(LineId),
    #[error("point {0} lies on no line of the configuration")]
    SeedNotOnConfiguration(P3Point),
    #[error("a point needs four coordinates, not all zero")]
    BadPoint,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Groupoid(#[from] GroupoidError),
    #[error("orbit-stabilizer identity fails: {0}")]
    Invariant(String),
}

/// A point `[x:y:z:w]` of P³ with first nonzero coordinate 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct P3Point {
    c: [FieldElement; 4],
}

impl P3Point {
    pub fn new(c: [FieldElement; 4]) -> Result<P3Point, OrbitError> {
        let f = c[0].field().clone();
        if c.iter().any(|x| !x.field().same(&f)) {
            return Err(FieldError::MixedFields.into());
        }
        let lead = c.iter().find(|x| !x.is_zero()).ok_or(OrbitError::BadPoint)?;
        if lead.is_one() {
            return Ok(P3Point { c });
        }
        let s = lead.inv()?;
        Ok(P3Point {
            c: c.map(|x| &x * &s),
        })
    }

    /// Parses `"[x:y:z:w]"` with entries in the syntax of `Field::parse_str`.
    pub fn parse(field: &Field, s: &str) -> Result<P3Point, OrbitError> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or(OrbitError::BadPoint)?;
        let parts: Vec<&str> = inner.split(':').collect();
        if parts.len() != 4 {
            return Err(OrbitError::BadPoint);
        }
        let mut c = Vec::with_capacity(4);
        for p in parts {
            c.push(field.parse_str(p.trim())?);
        }
        P3Point::new(c.try_into().expect("four entries"))
    }

    pub fn coords(&self) -> &[FieldElement; 4] {
        &self.c
    }

    pub fn field(&self) -> &Field {
        self.c[0].field()
    }

    pub fn to_code(&self) -> [ElementCode; 4] {
        [
            self.c[0].to_code(),
            self.c[1].to_code(),
            self.c[2].to_code(),
            self.c[3].to_code(),
        ]
    }
}

impl fmt::Display for P3Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}:{}:{}]", self.c[0], self.c[1], self.c[2], self.c[3])
    }
}

/// The point of `L_i` with coordinate `v`.
pub fn point_on_line(cfg: &LineConfig, i: LineId, v: &ProjPoint) -> Result<P3Point, OrbitError> {
    if !cfg.contains(i) {
        return Err(OrbitError::InvalidIndex(i));
    }
    let f = cfg.field();
    let (x, y) = (v.x().clone(), v.y().clone());
    let c = match cfg.matrix(i) {
        None => [f.zero(), f.zero(), x, y],
        Some(m) => {
            let (z, w) = m.apply(&x, &y);
            [x, y, z, w]
        }
    };
    P3Point::new(c)
}

/// The line through `p` and its coordinate there.
pub fn locate(cfg: &LineConfig, p: &P3Point) -> Result<(LineId, ProjPoint), OrbitError> {
    let [x, y, z, w] = p.coords();
    let missing = || OrbitError::SeedNotOnConfiguration(p.clone());
    if x.is_zero() && y.is_zero() {
        if !cfg.has_infinity() {
            return Err(missing());
        }
        return Ok((LineId::Infinity, ProjPoint::new(z.clone(), w.clone()).expect("nonzero")));
    }
    let v = ProjPoint::new(x.clone(), y.clone()).expect("nonzero");
    for id in cfg.lines() {
        if let Some(m) = cfg.matrix(id) {
            let (mz, mw) = m.apply(x, y);
            if &mz == z && &mw == w {
                return Ok((id, v));
            }
        }
    }
    Err(missing())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport {
    pub seed: P3Point,
    pub carrier: LineId,
    pub total_size: usize,
    pub per_line_sizes: BTreeMap<LineId, usize>,
    /// `|G| / |orbit ∩ carrier|`, when the group is known.
    pub stabilizer_order: Option<usize>,
    /// Points by line, each list sorted canonically.
    pub points: BTreeMap<LineId, Vec<P3Point>>,
    pub truncated: bool,
}

impl OrbitReport {
    fn from_states(
        cfg: &LineConfig,
        seed: P3Point,
        carrier: LineId,
        states: &[(LineId, ProjPoint)],
        truncated: bool,
    ) -> OrbitReport {
        let mut points: BTreeMap<LineId, Vec<P3Point>> =
            cfg.lines().into_iter().map(|l| (l, Vec::new())).collect();
        for (l, v) in states {
            points
                .get_mut(l)
                .expect("line of the configuration")
                .push(point_on_line(cfg, *l, v).expect("line of the configuration"));
        }
        for list in points.values_mut() {
            list.sort();
        }
        let per_line_sizes = points.iter().map(|(l, p)| (*l, p.len())).collect();
        OrbitReport {
            seed,
            carrier,
            total_size: states.len(),
            per_line_sizes,
            stabilizer_order: None,
            points,
            truncated,
        }
    }

    pub fn carrier_size(&self) -> usize {
        self.per_line_sizes[&self.carrier]
    }

    /// Fills in the stabilizer order from a completed closure.
    pub fn with_group(mut self, g: &GroupClosure) -> Result<OrbitReport, OrbitError> {
        if g.budget_hit() || self.truncated {
            return Err(GroupoidError::IncompleteClosure.into());
        }
        let size = self.carrier_size();
        if g.order() % size != 0 {
            return Err(OrbitError::Invariant(format!(
                "carrier orbit of size {size} in a group of order {}",
                g.order()
            )));
        }
        self.stabilizer_order = Some(g.order() / size);
        Ok(self)
    }

    /// All points as a set, for comparisons.
    pub fn point_set(&self) -> HashSet<P3Point> {
        self.points.values().flatten().cloned().collect()
    }
}

/// Closure of the seed under every `f_ijk` whose source is the line of the
/// current point, using `f_ijk(v, M_i v) = (F_ijk v, M_j F_ijk v)`.
pub fn orbit_full(cfg: &LineConfig, seed: &P3Point, budget: usize) -> Result<OrbitReport, OrbitError> {
    let (carrier, v0) = locate(cfg, seed)?;
    let mut maps: HashMap<LineId, Vec<(LineId, ProjElem)>> = HashMap::new();
    for t in triples(cfg) {
        maps.entry(t.i)
            .or_default()
            .push((t.j, generator(cfg, t.i, t.j, t.k)?));
    }
    let mut seen: HashSet<(LineId, ProjPoint)> = HashSet::new();
    let mut states = Vec::new();
    let mut queue = VecDeque::new();
    let mut truncated = false;
    seen.insert((carrier, v0.clone()));
    states.push((carrier, v0.clone()));
    queue.push_back((carrier, v0));
    'bfs: while let Some((l, v)) = queue.pop_front() {
        for (j, f) in maps.get(&l).map(Vec::as_slice).unwrap_or(&[]) {
            let state = (*j, f.apply(&v));
            if seen.contains(&state) {
                continue;
            }
            if states.len() >= budget {
                truncated = true;
                break 'bfs;
            }
            seen.insert(state.clone());
            states.push(state.clone());
            queue.push_back(state);
        }
    }
    Ok(OrbitReport::from_states(cfg, seed.clone(), carrier, &states, truncated))
}

/// Orbit size of `seed` under the closure acting by Möbius maps, and the
/// number of elements fixing it; their product is `|G|`.
pub fn orbit_on_line(g: &GroupClosure, seed: &ProjPoint) -> Result<(usize, usize), OrbitError> {
    if g.budget_hit() {
        return Err(GroupoidError::IncompleteClosure.into());
    }
    let mut orbit = HashSet::new();
    let mut fixers = 0;
    for x in g.elements() {
        let image = x.try_apply(seed).map_err(|_| FieldError::MixedFields)?;
        if &image == seed {
            fixers += 1;
        }
        orbit.insert(image);
    }
    if orbit.len() * fixers != g.order() {
        return Err(OrbitError::Invariant(format!(
            "{} · {fixers} ≠ {}",
            orbit.len(),
            g.order()
        )));
    }
    Ok((orbit.len(), fixers))
}

/// Candidate points in a fixed order: `[1:0]`, `[0:1]`, `[1:1]`, then `[1:c]`
/// for successive field elements `c`.
fn candidates(field: &Field) -> impl Iterator<Item = ProjPoint> + '_ {
    let head = [
        ProjPoint::infinity(field),
        ProjPoint::affine(&field.zero()),
        ProjPoint::affine(&field.one()),
    ];
    let tail = (0u64..).map_while(move |k| {
        let c = if field.is_finite() {
            field.element_by_index(k)?
        } else {
            field.from_i64(k as i64)
        };
        Some(ProjPoint::new(field.one(), c).expect("x = 1"))
    });
    head.into_iter().chain(tail)
}

/// The first candidate point fixed by no nontrivial element of the group.
pub fn generic_seed(g: &GroupClosure) -> Result<ProjPoint, OrbitError> {
    if g.budget_hit() {
        return Err(GroupoidError::IncompleteClosure.into());
    }
    let field = g.elements()[0].field().clone();
    let nontrivial: Vec<&ProjElem> = g.elements().iter().filter(|x| !x.is_identity()).collect();
    let found = candidates(&field).find(|v| nontrivial.iter().all(|x| !x.fixes(v)));
    found.ok_or_else(|| {
        OrbitError::Invariant("every point of the field is fixed by some element".into())
    })
}

/// Applies every map to every orbit point and reports whether anything new
/// appears.
pub fn is_stable(cfg: &LineConfig, report: &OrbitReport) -> Result<bool, OrbitError> {
    let set = report.point_set();
    for t in triples(cfg) {
        let f = generator(cfg, t.i, t.j, t.k)?;
        for p in &report.points[&t.i] {
            let (_, v) = locate(cfg, p)?;
            if !set.contains(&point_on_line(cfg, t.j, &f.apply(&v))?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
