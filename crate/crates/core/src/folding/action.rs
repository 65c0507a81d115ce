use std::collections::BTreeSet;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::lattice::Seed;
use crate::linalg::QVec;
use crate::scattering::{equivalent, Diagram, PointFunction, Wall};

/// A finite group of index permutations, `perm[i] = π(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    pub rank: usize,
    pub generators: Vec<Vec<usize>>,
    /// All group elements, identity first.
    pub elements: Vec<Vec<usize>>,
    /// Orbits, each sorted, ordered by smallest member.
    pub orbits: Vec<Vec<usize>>,
    pub orbit_of: Vec<usize>,
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    // (a ∘ b)(i) = a(b(i))
    b.iter().map(|&i| a[i]).collect()
}

pub fn inverse_perm(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

/// Permutation of `0..rank` given by disjoint cycles of 0-based indices.
pub fn perm_from_cycles(rank: usize, cycles: &[Vec<usize>]) -> Result<Vec<usize>> {
    let mut p: Vec<usize> = (0..rank).collect();
    let mut seen = BTreeSet::new();
    for c in cycles {
        for (k, &i) in c.iter().enumerate() {
            if i >= rank {
                return Err(Error::IndexOutOfRange { index: i, rank });
            }
            if !seen.insert(i) {
                return Err(Error::Input(format!("index {i} repeated in cycles")));
            }
            p[i] = c[(k + 1) % c.len()];
        }
    }
    Ok(p)
}

impl GroupAction {
    /// The group generated by `generators`.
    pub fn generate(rank: usize, generators: Vec<Vec<usize>>) -> Result<GroupAction> {
        for g in &generators {
            let set: BTreeSet<usize> = g.iter().copied().collect();
            if g.len() != rank || set.len() != rank || set.iter().any(|&i| i >= rank) {
                return Err(Error::Input(format!(
                    "{g:?} is not a permutation of {rank} indices"
                )));
            }
        }
        let id: Vec<usize> = (0..rank).collect();
        let mut elements = vec![id.clone()];
        let mut known: BTreeSet<Vec<usize>> = BTreeSet::from([id]);
        let mut frontier = 0;
        while frontier < elements.len() {
            let e = elements[frontier].clone();
            frontier += 1;
            for g in &generators {
                let p = compose(g, &e);
                if known.insert(p.clone()) {
                    elements.push(p);
                }
            }
        }
        let mut orbit_of = vec![usize::MAX; rank];
        let mut orbits = Vec::new();
        for i in 0..rank {
            if orbit_of[i] != usize::MAX {
                continue;
            }
            let o: BTreeSet<usize> = elements.iter().map(|p| p[i]).collect();
            for &j in &o {
                orbit_of[j] = orbits.len();
            }
            orbits.push(o.into_iter().collect());
        }
        Ok(GroupAction {
            rank,
            generators,
            elements,
            orbits,
            orbit_of,
        })
    }

    pub fn trivial(rank: usize) -> GroupAction {
        GroupAction::generate(rank, vec![]).expect("identity group")
    }

    /// Parses `{"generators": [g, ...]}` where each `g` is a cycle `[i, j, ...]`
    /// or a list of cycles, with 1-based indices.
    pub fn from_json(rank: usize, v: &Value) -> Result<GroupAction> {
        let gens = v["generators"]
            .as_array()
            .ok_or_else(|| Error::Json("missing generators".into()))?;
        let idx = |x: &Value| -> Result<usize> {
            let i = x
                .as_u64()
                .ok_or_else(|| Error::Json(format!("bad index {x}")))? as usize;
            i.checked_sub(1)
                .ok_or_else(|| Error::Json("indices are 1-based".into()))
        };
        let mut perms = Vec::new();
        for g in gens {
            let arr = g
                .as_array()
                .ok_or_else(|| Error::Json(format!("bad generator {g}")))?;
            let cycles: Vec<Vec<usize>> = if arr.iter().all(|x| x.is_array()) {
                arr.iter()
                    .map(|c| {
                        c.as_array()
                            .unwrap()
                            .iter()
                            .map(idx)
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<_>>()?
            } else {
                vec![arr.iter().map(idx).collect::<Result<Vec<_>>>()?]
            };
            perms.push(perm_from_cycles(rank, &cycles)?);
        }
        GroupAction::generate(rank, perms)
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, p: &[usize]) -> bool {
        self.elements.iter().any(|e| e == p)
    }
}

/// Checks `{e_{π·i}, e_{π'·j}} = {e_i, e_j}` for all `π, π'` in the generated group,
/// together with invariance of the multipliers and of the frozen set.
pub fn check_admissible(seed: &Seed, generators: Vec<Vec<usize>>) -> Result<GroupAction> {
    let a = GroupAction::generate(seed.rank, generators)?;
    for p in &a.elements {
        for i in 0..seed.rank {
            if seed.d[p[i]] != seed.d[i] || seed.is_frozen(p[i]) != seed.is_frozen(i) {
                return Err(Error::Input(format!(
                    "permutation {p:?} does not preserve multipliers or frozen indices at {i}"
                )));
            }
        }
    }
    for i in 0..seed.rank {
        for j in 0..seed.rank {
            let orbit_i: BTreeSet<usize> = a.elements.iter().map(|p| p[i]).collect();
            let orbit_j: BTreeSet<usize> = a.elements.iter().map(|p| p[j]).collect();
            for &pi in &orbit_i {
                for &pj in &orbit_j {
                    if seed.skew[pi][pj] != seed.skew[i][j] {
                        return Err(Error::Inadmissible {
                            i,
                            j,
                            pi_i: pi,
                            pi_j: pj,
                        });
                    }
                }
            }
        }
    }
    Ok(a)
}

/// `(π⁻¹)^* x`: the point with `y_{π(i)} = x_i`, so that `<π n, y> = <n, x>`.
pub fn act_point(pi: &[usize], x: &[crate::linalg::Q]) -> QVec {
    let mut y = x.to_vec();
    for (i, v) in x.iter().enumerate() {
        y[pi[i]] = v.clone();
    }
    y
}

/// `π·(n0, f) = (π n0, f)`.
pub fn act_point_function(pi: &[usize], pf: &PointFunction) -> PointFunction {
    let mut normal = pf.normal.clone();
    for (i, &x) in pf.normal.iter().enumerate() {
        normal[pi[i]] = x;
    }
    PointFunction {
        normal,
        func: pf.func.clone(),
    }
}

/// `π` applied to a wall: support moved by `(π⁻¹)^*`, exponents by `π`.
pub fn pi_act_wall(action: &GroupAction, pi: &[usize], w: &Wall) -> Result<Wall> {
    if !action.contains(pi) {
        return Err(Error::Input(format!("{pi:?} is not in the group")));
    }
    Ok(w.permuted(pi))
}

fn permuted_diagram(d: &Diagram, pi: &[usize]) -> Diagram {
    Diagram {
        seed: d.seed.clone(),
        order: d.order,
        walls: d.walls.iter().map(|w| w.permuted(pi)).collect(),
    }
}

/// True if the diagram (as an element, up to equivalence) is fixed by every generator.
pub fn is_pi_invariant_element(action: &GroupAction, d: &Diagram) -> Result<bool> {
    for g in &action.generators {
        if !equivalent(d, &permuted_diagram(d, g))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True if the incoming walls form a set mapped to itself by every generator.
pub fn incoming_walls_invariant(action: &GroupAction, d: &Diagram) -> bool {
    let incoming = d.incoming();
    let same = |a: &Wall, b: &Wall| {
        a.normal == b.normal && a.func == b.func && a.support.same_set(&b.support)
    };
    action.generators.iter().all(|g| {
        incoming
            .iter()
            .all(|w| incoming.iter().any(|v| same(&w.permuted(g), v)))
    })
}

/// Checks `π·g_x(𝔇) = g_{(π⁻¹)^* x}(𝔇)` for every group element at each point;
/// returns the first failing `(point, element)`.
pub fn equivariance_witness(
    action: &GroupAction,
    d: &Diagram,
    points: &[QVec],
) -> Result<Option<(QVec, Vec<usize>)>> {
    for x in points {
        let gx = d.g_x(x)?;
        for pi in &action.elements {
            let lhs = gx.as_ref().map(|pf| act_point_function(pi, pf));
            let rhs = d.g_x(&act_point(pi, x))?;
            if lhs != rhs {
                return Ok(Some((x.clone(), pi.clone())));
            }
        }
    }
    Ok(None)
}
