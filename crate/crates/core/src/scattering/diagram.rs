use serde_json::json;

use super::crossing::{apply_sequence, Ring, WallCrossing};
use super::wall::{Wall, WallKind};
use crate::error::{Error, Result};
use crate::lattice::{Cone, Seed};
use crate::linalg::{self, dot, QVec, Q};
use crate::poly::{Laurent, Series1};

/// A scattering diagram truncated at `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub seed: Seed,
    pub order: u32,
    pub walls: Vec<Wall>,
}

/// One transversal crossing of a piecewise-linear path with a wall.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathCrossing {
    pub wall: usize,
    pub sign: i64,
    pub segment: usize,
    pub t: Q,
}

/// Product of the functions of all walls through a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointFunction {
    pub normal: Vec<i64>,
    pub func: Series1,
}

impl Diagram {
    pub fn new(seed: Seed, order: u32) -> Self {
        Diagram {
            seed,
            order,
            walls: vec![],
        }
    }

    /// Walls `(e_i^⊥, (1 + z^{e_i})^{d_i})` for every unfrozen index.
    pub fn initial(seed: &Seed, order: u32) -> Self {
        let mut d = Diagram::new(seed.clone(), order);
        for i in seed.unfrozen() {
            let w = Wall::hyperplane(
                seed,
                seed.basis_vector(i),
                Series1::binomial(seed.d[i] as u32),
            )
            .expect("initial wall is valid");
            d.walls.push(w.truncated(order as i64));
        }
        d
    }

    pub fn rank(&self) -> usize {
        self.seed.rank
    }

    pub fn push(&mut self, w: Wall) -> Result<()> {
        w.validate(&self.seed)?;
        self.walls.push(w.truncated(self.order as i64));
        Ok(())
    }

    pub fn nontrivial_walls(&self) -> impl Iterator<Item = &Wall> {
        self.walls.iter().filter(|w| !w.is_trivial())
    }

    pub fn classify(&self, w: &Wall) -> WallKind {
        w.classify(&self.seed)
    }

    pub fn incoming(&self) -> Vec<&Wall> {
        self.nontrivial_walls()
            .filter(|w| self.classify(w) == WallKind::Incoming)
            .collect()
    }

    /// Distinct normals of nontrivial walls.
    pub fn normals(&self) -> Vec<Vec<i64>> {
        let mut ns: Vec<Vec<i64>> = self.nontrivial_walls().map(|w| w.normal.clone()).collect();
        ns.sort();
        ns.dedup();
        ns
    }

    fn normal_q(&self, n: &[i64]) -> QVec {
        self.seed.normal(n)
    }

    /// `g_x`: product of functions of walls containing `x`.
    ///
    /// Returns `None` if no nontrivial wall contains `x`; fails if walls with
    /// different normals meet at `x`.
    pub fn g_x(&self, x: &[Q]) -> Result<Option<PointFunction>> {
        let mut acc: Option<PointFunction> = None;
        for w in self.nontrivial_walls() {
            if !w.support.contains(x) {
                continue;
            }
            match &mut acc {
                None => {
                    acc = Some(PointFunction {
                        normal: w.normal.clone(),
                        func: w.func.clone(),
                    })
                }
                Some(pf) => {
                    if pf.normal != w.normal {
                        return Err(Error::NonGeneric(format!(
                            "{} lies on walls with normals {:?} and {:?}",
                            linalg::fmt_vec(x),
                            pf.normal,
                            w.normal
                        )));
                    }
                    let max = (self.order as i64 / w.step()) as usize;
                    pf.func = pf.func.mul(&w.func, max);
                }
            }
        }
        Ok(acc.filter(|pf| !pf.func.is_one()))
    }

    /// Crossings of the polyline through `waypoints`, in path order.
    pub fn crossings(&self, waypoints: &[QVec]) -> Result<Vec<PathCrossing>> {
        for p in waypoints {
            if p.len() != self.rank() {
                return Err(Error::DimensionMismatch {
                    expected: self.rank(),
                    got: p.len(),
                });
            }
            if self.nontrivial_walls().any(|w| w.support.contains(p)) {
                return Err(Error::NonGeneric(format!("waypoint {p:?} lies on a wall")));
            }
        }
        let mut out = Vec::new();
        for (si, seg) in waypoints.windows(2).enumerate() {
            let (a, b) = (&seg[0], &seg[1]);
            let v = linalg::sub(b, a);
            let mut here: Vec<PathCrossing> = Vec::new();
            for (wi, w) in self.walls.iter().enumerate() {
                if w.is_trivial() {
                    continue;
                }
                let nv = self.normal_q(&w.normal);
                let alpha = dot(&nv, a);
                let beta = dot(&nv, b);
                let (sa, sb) = (linalg::sign(&alpha), linalg::sign(&beta));
                if sa == 0 && sb == 0 {
                    return Err(Error::NonGeneric(format!(
                        "segment {si} runs inside the hyperplane of wall {wi}"
                    )));
                }
                if sa == sb || sa == 0 || sb == 0 {
                    continue;
                }
                let t = &alpha / (&alpha - &beta);
                let x = linalg::add(a, &linalg::scale(&t, &v));
                if !w.support.contains(&x) {
                    continue;
                }
                if !w.support.contains_relint(&x) {
                    return Err(Error::NonGeneric(format!(
                        "segment {si} meets the boundary of wall {wi}"
                    )));
                }
                let sign = -i64::from(linalg::sign(&dot(&nv, &v)));
                here.push(PathCrossing {
                    wall: wi,
                    sign,
                    segment: si,
                    t,
                });
            }
            here.sort_by(|p, q| p.t.cmp(&q.t).then(p.wall.cmp(&q.wall)));
            for pair in here.windows(2) {
                if pair[0].t == pair[1].t
                    && self.walls[pair[0].wall].normal != self.walls[pair[1].wall].normal
                {
                    return Err(Error::Joint(format!(
                        "segment {si} passes through a joint at parameter {}",
                        pair[0].t
                    )));
                }
            }
            out.extend(here);
        }
        Ok(out)
    }

    /// The crossing automorphisms along the polyline, first crossing first.
    pub fn path_sequence(&self, waypoints: &[QVec]) -> Result<Vec<WallCrossing>> {
        Ok(self
            .crossings(waypoints)?
            .into_iter()
            .map(|c| {
                let w = &self.walls[c.wall];
                WallCrossing::new(w.normal.clone(), w.func.clone(), c.sign)
            })
            .collect())
    }

    /// Applies the path-ordered product to `f`, truncated at `order` above the lowest degree of `f`.
    pub fn path_product(&self, waypoints: &[QVec], ring: Ring, f: &Laurent) -> Result<Laurent> {
        let seq = self.path_sequence(waypoints)?;
        let base = f.min_degree(ring.grading(self.rank())).unwrap_or(0);
        apply_sequence(&self.seed, ring, &seq, f, base + self.order as i64)
    }

    /// Checks that the closed loop through `waypoints` acts trivially on the
    /// monomials `z^{(d_i f_i, 0)}`. These pair integrally with every normal,
    /// and an automorphism fixing them is the identity.
    /// Returns the first offending index.
    pub fn loop_defect(&self, waypoints: &[QVec]) -> Result<Option<usize>> {
        let mut pts = waypoints.to_vec();
        if pts.first() != pts.last() {
            pts.push(pts[0].clone());
        }
        let seq = self.path_sequence(&pts)?;
        let r = self.rank();
        for i in 0..r {
            let mut m = self.seed.basis_vector(i);
            m[i] = self.seed.d[i];
            let z = Laurent::var_power(&Ring::prin_exp(&m, &vec![0; r]));
            let img = apply_sequence(&self.seed, Ring::Prin, &seq, &z, self.order as i64)?;
            if img != z {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// Points of the essential support: union of supports of nontrivial walls.
    pub fn in_support(&self, x: &[Q]) -> bool {
        self.nontrivial_walls().any(|w| w.support.contains(x))
    }

    /// True if `x` lies off every wall hyperplane, or on exactly one hyperplane
    /// and in the relative interior of every wall support containing it.
    pub fn is_general(&self, x: &[Q]) -> bool {
        let mut hit: Option<&Vec<i64>> = None;
        for w in self.nontrivial_walls() {
            if linalg::sign(&dot(&self.normal_q(&w.normal), x)) != 0 {
                continue;
            }
            match hit {
                Some(n) if n != &w.normal => return false,
                _ => hit = Some(&w.normal),
            }
            if w.support.contains(x) && !w.support.contains_relint(x) {
                return false;
            }
        }
        true
    }

    /// Drops trivial walls and sorts canonically.
    pub fn sorted(&self) -> Diagram {
        let mut walls: Vec<Wall> = self.nontrivial_walls().cloned().collect();
        walls.sort_by(|a, b| {
            (
                a.normal.clone(),
                a.support.rays().to_vec(),
                a.support.lines().to_vec(),
            )
                .cmp(&(
                    b.normal.clone(),
                    b.support.rays().to_vec(),
                    b.support.lines().to_vec(),
                ))
        });
        Diagram {
            seed: self.seed.clone(),
            order: self.order,
            walls,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let d = self.sorted();
        json!({
            "order": d.order,
            "walls": d.walls.iter().map(|w| w.to_json()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(seed: &Seed, v: &serde_json::Value) -> Result<Diagram> {
        let order = v["order"]
            .as_u64()
            .ok_or_else(|| Error::Json("missing order".into()))? as u32;
        let walls = v["walls"]
            .as_array()
            .ok_or_else(|| Error::Json("missing walls".into()))?;
        let mut d = Diagram::new(seed.clone(), order);
        for w in walls {
            d.push(Wall::from_json(seed, w)?)?;
        }
        Ok(d)
    }

    /// Splits wall `i` along the hyperplane `h` into two walls with the same function.
    pub fn split_wall(&self, i: usize, h: &[Q]) -> Diagram {
        let w = &self.walls[i];
        let (ineqs, eqs) = w.support.hrep();
        let dim = self.rank();
        let mut out = self.clone();
        out.walls.remove(i);
        for s in [1, -1] {
            let mut a = ineqs.clone();
            a.push(h.iter().map(|x| x * Q::from_integer(s.into())).collect());
            let c = Cone::from_hrep(&a, &eqs, dim);
            if c.dimension() + 1 == dim {
                out.walls.push(Wall {
                    support: c,
                    ..w.clone()
                });
            }
        }
        out
    }
}
