use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::crossing::{apply_sequence, Ring, WallCrossing};
use super::rank2::degree_defect;
use super::wall::{n_degree, primitive_part};
use crate::error::{Error, Result};
use crate::lattice::Seed;
use crate::linalg::{self, QVec, Q};
use crate::poly::{Laurent, Series1};

/// Parallel components of a rank-2 automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    /// Normals in the order their factors act.
    pub order: Vec<Vec<i64>>,
    pub components: BTreeMap<Vec<i64>, Series1>,
}

impl Factorization {
    /// The ordered product as a crossing sequence.
    pub fn sequence(&self) -> Vec<WallCrossing> {
        self.order
            .iter()
            .filter_map(|n| {
                self.components
                    .get(n)
                    .filter(|f| !f.is_one())
                    .map(|f| WallCrossing::new(n.clone(), f.clone(), 1))
            })
            .collect()
    }

    pub fn nontrivial(&self) -> BTreeMap<Vec<i64>, Series1> {
        self.components
            .iter()
            .filter(|(_, f)| !f.is_one())
            .map(|(n, f)| (n.clone(), f.clone()))
            .collect()
    }
}

/// Point of `n0^⊥` on the outgoing side, `-{n0,·}`.
fn outgoing_direction(seed: &Seed, n0: &[i64]) -> QVec {
    seed.p_star(n0)
        .iter()
        .map(|&x| Q::from_integer(BigInt::from(-x)))
        .collect()
}

fn cross(a: &[Q], b: &[Q]) -> Q {
    &a[0] * &b[1] - &a[1] * &b[0]
}

/// Primitive normals of degree at most `k`, in the order a path from `C^+` to
/// `C^-` sweeping through the outgoing half-plane crosses their hyperplanes.
pub fn sweep_order(seed: &Seed, k: u32) -> Result<Vec<Vec<i64>>> {
    if seed.rank != 2 {
        return Err(Error::Unsupported(format!(
            "factorization in rank {}",
            seed.rank
        )));
    }
    let mut normals = Vec::new();
    for deg in 1..=k as i64 {
        for a in 0..=deg {
            let n = vec![a, deg - a];
            if primitive_part(&n).1 == 1 {
                if seed.p_star(&n).iter().all(|&x| x == 0) {
                    return Err(Error::Unsupported("degenerate skew form".into()));
                }
                normals.push(n);
            }
        }
    }
    // the sweep turns from C^+ toward -{e1+e2,·}
    let plus = linalg::qvec(&[1, 1]);
    let turn = linalg::sign(&cross(&plus, &outgoing_direction(seed, &[1, 1])));
    normals.sort_by(|a, b| {
        let c = linalg::sign(&cross(
            &outgoing_direction(seed, a),
            &outgoing_direction(seed, b),
        ));
        match c * turn {
            1 => Ordering::Less,
            -1 => Ordering::Greater,
            _ => Ordering::Equal,
        }
    });
    Ok(normals)
}

/// Primitive normals of degree at most `k` whose hyperplanes the segment from
/// `a` to `b` crosses, sorted by crossing time. Normals crossed at the same
/// time keep lexicographic order.
pub fn segment_order(seed: &Seed, a: &[Q], b: &[Q], k: u32) -> Result<Vec<Vec<i64>>> {
    let mut timed: Vec<(Q, Vec<i64>)> = Vec::new();
    for n in primitive_normals(seed.rank, k) {
        let pa = seed.pair(&n, a);
        let pb = seed.pair(&n, b);
        let (sa, sb) = (linalg::sign(&pa), linalg::sign(&pb));
        if sa == 0 || sb == 0 {
            return Err(Error::NonGeneric(format!(
                "segment endpoint lies on the hyperplane of {n:?}"
            )));
        }
        if sa != sb {
            let t = &pa / (&pa - &pb);
            timed.push((t, n));
        }
    }
    timed.sort();
    Ok(timed.into_iter().map(|(_, n)| n).collect())
}

/// Crossing time of `n^⊥` along the segment from `a` to `b`.
pub fn crossing_time(seed: &Seed, n: &[i64], a: &[Q], b: &[Q]) -> Q {
    let pa = seed.pair(n, a);
    let pb = seed.pair(n, b);
    &pa / (&pa - &pb)
}

/// Primitive vectors of `N^+` with total degree in `1..=k`.
pub fn primitive_normals(rank: usize, k: u32) -> Vec<Vec<i64>> {
    fn rec(prefix: &mut Vec<i64>, left: usize, budget: i64, out: &mut Vec<Vec<i64>>) {
        if left == 0 {
            if prefix.iter().any(|&x| x != 0) && primitive_part(prefix).1 == 1 {
                out.push(prefix.clone());
            }
            return;
        }
        for x in 0..=budget {
            prefix.push(x);
            rec(prefix, left - 1, budget - x, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), rank, k as i64, &mut out);
    out
}

/// Factors `p` (given by its crossings, first applied first) as a product of
/// crossings with sign `+1`, one per normal of `order` and applied in that
/// order, modulo degree `> k`.
///
/// Normals sharing a crossing time must commute for the result to be unique.
pub fn factorize_along(
    seed: &Seed,
    p: &[WallCrossing],
    order: Vec<Vec<i64>>,
    k: u32,
) -> Result<Factorization> {
    let mut fac = Factorization {
        components: order.iter().map(|n| (n.clone(), Series1::one())).collect(),
        order,
    };
    for j in 1..=k as i64 {
        let mut seq = p.to_vec();
        seq.extend(fac.sequence().iter().rev().map(|c| c.inverse()));
        for (n, a) in degree_defect(seed, &seq, j)? {
            if a.is_zero() {
                continue;
            }
            if !a.is_integer() {
                return Err(Error::Division(format!(
                    "component coefficient {a} at {n:?}"
                )));
            }
            let (n0, ell) = primitive_part(&n);
            let mut coeffs = vec![BigInt::zero(); ell as usize + 1];
            coeffs[0] = BigInt::from(1);
            coeffs[ell as usize] = a.to_integer();
            let max = (k as i64 / n_degree(&n0)) as usize;
            let f = fac
                .components
                .get_mut(&n0)
                .ok_or_else(|| Error::Input(format!("component at {n0:?} is not crossed")))?;
            *f = f.mul(&Series1::from_coeffs(coeffs), max);
        }
    }
    Ok(fac)
}

/// Rank-2 factorization in the order of [`sweep_order`].
pub fn psi_factorize(seed: &Seed, p: &[WallCrossing], k: u32) -> Result<Factorization> {
    factorize_along(seed, p, sweep_order(seed, k)?, k)
}

/// True if `p` and `q` act identically on `z^{(d_i f_i, 0)}` and `z^{(0, e_i)}` modulo degree `> k`.
pub fn same_action(seed: &Seed, p: &[WallCrossing], q: &[WallCrossing], k: u32) -> Result<bool> {
    let r = seed.rank;
    for i in 0..r {
        let mut m = vec![0; r];
        m[i] = seed.d[i];
        let mut n = vec![0; r];
        n[i] = 1;
        for e in [
            Ring::prin_exp(&m, &vec![0; r]),
            Ring::prin_exp(&vec![0; r], &n),
        ] {
            let z = Laurent::var_power(&e);
            if apply_sequence(seed, Ring::Prin, p, &z, k as i64)?
                != apply_sequence(seed, Ring::Prin, q, &z, k as i64)?
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
