//! Orbits computed in P³ directly: the image of `p ∈ L_i` under `f_ijk` is
//! the point where the plane spanned by `p` and `L_k` meets `L_j`.

use std::collections::{HashSet, VecDeque};

use crate::config::{LineConfig, LineId};
use crate::exactfield::{kernel, FieldElement};
use crate::groupoid::triples;

use super::{locate, OrbitError, OrbitReport, P3Point};

/// Two points spanning `L_i`.
fn basis(cfg: &LineConfig, id: LineId) -> [[FieldElement; 4]; 2] {
    let f = cfg.field();
    let (o, l) = (f.zero(), f.one());
    match cfg.matrix(id) {
        None => [
            [o.clone(), o.clone(), l.clone(), o.clone()],
            [o.clone(), o.clone(), o, l],
        ],
        Some(m) => {
            let [a, b, c, d] = m.entries().clone();
            [[l.clone(), o.clone(), a, c], [o, l, b, d]]
        }
    }
}

/// `span(p, L_k) ∩ L_j`.
fn project(cfg: &LineConfig, p: &P3Point, j: LineId, k: LineId) -> Result<P3Point, OrbitError> {
    let f = cfg.field();
    let [aj, bj] = basis(cfg, j);
    let [ak, bk] = basis(cfg, k);
    let cols = [&aj, &bj, p.coords(), &ak, &bk];
    let rows: Vec<Vec<FieldElement>> = (0..4)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    let ker = kernel(f, &rows, 5);
    let sol = ker
        .iter()
        .find(|v| !(v[0].is_zero() && v[1].is_zero()))
        .ok_or_else(|| OrbitError::Invariant("plane misses the target line".into()))?;
    let c: Vec<FieldElement> = (0..4)
        .map(|r| &(&sol[0] * &aj[r]) + &(&sol[1] * &bj[r]))
        .collect();
    P3Point::new(c.try_into().expect("four coordinates"))
}

/// The same orbit as `orbit_full`, built from plane intersections only.
pub fn orbit_geometric(
    cfg: &LineConfig,
    seed: &P3Point,
    budget: usize,
) -> Result<OrbitReport, OrbitError> {
    let (carrier, _) = locate(cfg, seed)?;
    let pairs: Vec<(LineId, LineId, LineId)> =
        triples(cfg).into_iter().map(|t| (t.i, t.j, t.k)).collect();
    let mut seen: HashSet<P3Point> = HashSet::new();
    let mut found = vec![(carrier, seed.clone())];
    let mut queue = VecDeque::from([(carrier, seed.clone())]);
    let mut truncated = false;
    seen.insert(seed.clone());
    'bfs: while let Some((l, p)) = queue.pop_front() {
        for &(_, j, k) in pairs.iter().filter(|t| t.0 == l) {
            let q = project(cfg, &p, j, k)?;
            if seen.contains(&q) {
                continue;
            }
            if found.len() >= budget {
                truncated = true;
                break 'bfs;
            }
            seen.insert(q.clone());
            found.push((j, q.clone()));
            queue.push_back((j, q));
        }
    }
    let states = found
        .into_iter()
        .map(|(l, p)| {
            let (l2, v) = locate(cfg, &p)?;
            debug_assert_eq!(l, l2);
            Ok((l2, v))
        })
        .collect::<Result<Vec<_>, OrbitError>>()?;
    Ok(OrbitReport::from_states(cfg, seed.clone(), carrier, &states, truncated))
}
