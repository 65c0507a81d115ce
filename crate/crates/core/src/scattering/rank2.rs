use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::crossing::{apply_sequence, Ring, WallCrossing};
use super::diagram::Diagram;
use super::wall::{primitive_part, Wall};
use crate::error::{Error, Result};
use crate::lattice::{Cone, Seed};
use crate::linalg::{self, QVec, Q};
use crate::poly::{Laurent, Series1};

fn half(v: &[Q]) -> u8 {
    let (x, y) = (linalg::sign(&v[0]), linalg::sign(&v[1]));
    if y > 0 || (y == 0 && x > 0) {
        0
    } else {
        1
    }
}

fn cross(a: &[Q], b: &[Q]) -> Q {
    &a[0] * &b[1] - &a[1] * &b[0]
}

/// Counter-clockwise angular order of nonzero plane vectors, starting at the positive x-axis.
pub fn angle_cmp(a: &[Q], b: &[Q]) -> Ordering {
    half(a)
        .cmp(&half(b))
        .then_with(|| 0.cmp(&linalg::sign(&cross(a, b))))
}

fn same_direction(a: &[Q], b: &[Q]) -> bool {
    half(a) == half(b) && linalg::sign(&cross(a, b)) == 0
}

fn ray_directions(d: &Diagram) -> Vec<QVec> {
    let mut dirs = Vec::new();
    for w in d.nontrivial_walls() {
        dirs.extend(w.support.rays().iter().cloned());
        for l in w.support.lines() {
            dirs.push(l.clone());
            dirs.push(linalg::neg(l));
        }
    }
    dirs
}

/// Waypoints of a counter-clockwise loop around the origin crossing every
/// ray in `dirs` exactly once. The first waypoint is repeated at the end.
pub fn loop_around_origin(dirs: &[QVec]) -> Vec<QVec> {
    let mut all: Vec<QVec> = dirs.to_vec();
    for (x, y) in [
        (1, 0),
        (1, 1),
        (0, 1),
        (-1, 1),
        (-1, 0),
        (-1, -1),
        (0, -1),
        (1, -1),
    ] {
        all.push(linalg::qvec(&[x, y]));
    }
    all.sort_by(|a, b| angle_cmp(a, b));
    let mut uniq: Vec<QVec> = Vec::new();
    for v in all {
        if uniq.last().is_none_or(|u| !same_direction(u, &v)) {
            uniq.push(v);
        }
    }
    if uniq.len() > 1 && same_direction(&uniq[0], uniq.last().unwrap()) {
        uniq.pop();
    }
    let unit = |v: &QVec| -> QVec {
        linalg::primitive(v)
            .into_iter()
            .map(Q::from_integer)
            .collect()
    };
    let n = uniq.len();
    let mut pts: Vec<QVec> = (0..n)
        .map(|i| linalg::add(&unit(&uniq[i]), &unit(&uniq[(i + 1) % n])))
        .collect();
    pts.push(pts[0].clone());
    pts
}

/// Sign with which a counter-clockwise loop crosses a wall with normal `n0` on the ray `u`.
fn ccw_sign(seed: &Seed, n0: &[i64], u: &[Q]) -> i64 {
    let tangent = vec![-u[1].clone(), u[0].clone()];
    -i64::from(linalg::sign(&seed.pair(n0, &tangent)))
}

/// Degree-`j` part of an automorphism that is the identity below degree `j`,
/// as `n ↦ a_n` where it acts by `z^m ↦ z^m (1 + Σ a_n <n0(n), m> z^{({n,·}, n)})`
/// modulo higher degree.
pub(crate) fn degree_defect(
    seed: &Seed,
    seq: &[WallCrossing],
    j: i64,
) -> Result<BTreeMap<Vec<i64>, Q>> {
    let r = seed.rank;
    let mut out: BTreeMap<Vec<i64>, Q> = BTreeMap::new();
    for i in seed.unfrozen() {
        // z^{(d_i f_i, 0)} pairs integrally with every normal
        let mut fi = vec![0; r];
        fi[i] = seed.d[i];
        let z = Laurent::var_power(&Ring::prin_exp(&fi, &vec![0; r]));
        let img = apply_sequence(seed, Ring::Prin, seq, &z, j)?;
        let diff = img.sub(&z)?;
        for (e, c) in diff.terms() {
            let n = e[r..].to_vec();
            if n.iter().sum::<i64>() < j {
                return Err(Error::Input(format!(
                    "automorphism not trivial below degree {j}: term {e:?}"
                )));
            }
            let (n0, _) = primitive_part(&n);
            if n0[i] == 0
                || e[..r]
                    .iter()
                    .zip(&fi)
                    .map(|(x, y)| x - y)
                    .ne(seed.p_star(&n))
            {
                return Err(Error::Input(format!(
                    "degree-{j} term {e:?} is not a wall-type derivation"
                )));
            }
            // c = a_n <n0, d_i f_i> = a_n n0_i
            let a = Q::from_integer(c.clone()) / Q::from_integer(BigInt::from(n0[i]));
            if let Some(prev) = out.get(&n) {
                if prev != &a {
                    return Err(Error::Input(format!(
                        "degree-{j} term at {n:?} is not a wall-type derivation"
                    )));
                }
            }
            out.insert(n, a);
        }
    }
    Ok(out)
}

fn loop_defect_at(d: &Diagram, waypoints: &[QVec], j: i64) -> Result<BTreeMap<Vec<i64>, Q>> {
    degree_defect(&d.seed, &d.path_sequence(waypoints)?, j)
}

/// Completes a rank-2 diagram to a consistent one at order `k` by inserting
/// outgoing walls degree by degree.
pub fn complete_rank2(init: &Diagram, k: u32) -> Result<Diagram> {
    if init.rank() != 2 {
        return Err(Error::Unsupported(format!(
            "rank-2 completion of a rank-{} diagram",
            init.rank()
        )));
    }
    let seed = init.seed.clone();
    let mut d = Diagram::new(seed.clone(), k);
    for w in init.nontrivial_walls() {
        d.push(w.clone())?;
    }
    for j in 1..=k as i64 {
        let mut dirs = ray_directions(&d);
        for a in 0..=j {
            let n = [a, j - a];
            let ps = seed.p_star(&n);
            if ps.iter().any(|&x| x != 0) {
                dirs.push(linalg::qvec(&[-ps[0], -ps[1]]));
            }
        }
        let lp = loop_around_origin(&dirs);
        let defect = loop_defect_at(&d, &lp, j)?;
        for (n, a) in defect {
            if a.is_zero() {
                continue;
            }
            let (n0, ell) = primitive_part(&n);
            let ps = seed.p_star(&n0);
            if ps.iter().all(|&x| x == 0) {
                return Err(Error::Input(format!(
                    "defect in direction {n0:?} with {{n0,·}} = 0"
                )));
            }
            let u = linalg::qvec(&[-ps[0], -ps[1]]);
            let s = ccw_sign(&seed, &n0, &u);
            let b = -a * Q::from_integer(BigInt::from(s));
            if !b.is_integer() {
                return Err(Error::Division(format!("wall coefficient {b} at {n:?}")));
            }
            let mut coeffs = vec![BigInt::zero(); ell as usize + 1];
            coeffs[0] = BigInt::from(1);
            coeffs[ell as usize] = b.to_integer();
            let factor = Series1::from_coeffs(coeffs);
            let max = (k as i64 / (n0[0] + n0[1])) as usize;
            let ray = Cone::new(vec![u.clone()], vec![]);
            if let Some(w) = d
                .walls
                .iter_mut()
                .find(|w| w.normal == n0 && w.support == ray)
            {
                w.func = w.func.mul(&factor, max);
            } else {
                d.push(Wall::new(&seed, n0, ray, factor)?)?;
            }
        }
    }
    d.walls.retain(|w| !w.is_trivial());
    Ok(d)
}

/// A loop around the origin crossing every wall of a rank-2 diagram once.
pub fn rank2_loop(d: &Diagram) -> Vec<QVec> {
    loop_around_origin(&ray_directions(d))
}
