use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::diagram::Diagram;
use crate::linalg::{self, QVec, Q};

fn random_int_point(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> QVec {
    (0..dim)
        .map(|_| Q::from_integer(rng.gen_range(-bound..=bound).into()))
        .collect()
}

/// Deterministic general points: three quarters lie in relative interiors of
/// wall supports, the rest off the support.
pub fn sample_general_points(d: &Diagram, count: usize, seed: u64) -> Vec<QVec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let walls: Vec<_> = d.nontrivial_walls().collect();
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < 100 * count.max(1) {
        attempts += 1;
        let x = if !walls.is_empty() && rng.gen_range(0..4) < 3 {
            let w = walls[rng.gen_range(0..walls.len())];
            let mut p = vec![linalg::q(0); d.rank()];
            for r in w.support.rays() {
                p = linalg::add(&p, &linalg::scale(&linalg::q(rng.gen_range(1..=60)), r));
            }
            for l in w.support.lines() {
                p = linalg::add(&p, &linalg::scale(&linalg::q(rng.gen_range(-60..=60)), l));
            }
            p
        } else {
            random_int_point(&mut rng, d.rank(), 60)
        };
        if x.iter().all(|c| c == &linalg::q(0)) || !d.is_general(&x) {
            continue;
        }
        out.push(x);
    }
    out
}

/// Deterministic closed polylines with `corners` waypoints off the support,
/// crossing walls only transversally away from joints.
pub fn sample_generic_loops(
    d: &Diagram,
    count: usize,
    corners: usize,
    seed: u64,
) -> Vec<Vec<QVec>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < 100 * count.max(1) {
        attempts += 1;
        let mut pts: Vec<QVec> = (0..corners)
            .map(|_| random_int_point(&mut rng, d.rank(), 30))
            .collect();
        pts.push(pts[0].clone());
        if d.crossings(&pts).is_ok() {
            out.push(pts);
        }
    }
    out
}
