//! Shared seeds and reference polynomials.
#![allow(dead_code)]

use cluster_scatter::atlas::{build_atilde, Atlas, CrossEdge, DtTransform};
use cluster_scatter::folding::{fold_seed, FoldingMap};
use cluster_scatter::lattice::Seed;
use cluster_scatter::poly::{exact_div, Laurent};

pub fn s24() -> Seed {
    Seed::skew_symmetric(vec![
        vec![0, 1, -1, 0, 1, -1],
        vec![-1, 0, 1, -1, 0, 1],
        vec![1, -1, 0, 1, -1, 0],
        vec![0, 1, -1, 0, 1, -1],
        vec![-1, 0, 1, -1, 0, 1],
        vec![1, -1, 0, 1, -1, 0],
    ])
    .unwrap()
}

pub fn green() -> Vec<usize> {
    [1, 3, 2, 4, 6, 5, 1, 6, 4, 3, 2, 5]
        .iter()
        .map(|i| i - 1)
        .collect()
}

pub fn poly(nvars: usize, terms: &[(Vec<i64>, i64)]) -> Laurent {
    Laurent::from_terms(nvars, terms.iter().map(|(e, c)| (e.clone(), (*c).into())))
}

pub fn reference_f() -> Laurent {
    let mono = |idx: &[usize]| {
        let mut e = vec![0; 6];
        for &i in idx {
            e[i - 1] += 1;
        }
        (e, 1)
    };
    poly(
        6,
        &[
            mono(&[]),
            mono(&[1]),
            mono(&[1, 3]),
            mono(&[1, 6]),
            mono(&[1, 3, 6]),
            mono(&[1, 3, 5, 6]),
            mono(&[1, 2, 3, 6]),
            mono(&[1, 2, 3, 5, 6]),
            mono(&[1, 1, 2, 3, 5, 6]),
        ],
    )
}

pub fn reference_fbar() -> Laurent {
    poly(
        3,
        &[
            (vec![0, 0, 0], 1),
            (vec![1, 0, 0], 1),
            (vec![1, 0, 1], 2),
            (vec![1, 0, 2], 1),
            (vec![1, 1, 2], 2),
            (vec![1, 2, 2], 1),
            (vec![2, 2, 2], 1),
        ],
    )
}

pub fn reference_g() -> Laurent {
    poly(
        3,
        &[
            (vec![0, 0, 0], 1),
            (vec![1, 0, 0], 1),
            (vec![1, 1, 0], 2),
            (vec![1, 2, 0], 1),
            (vec![1, 2, 1], 2),
            (vec![1, 2, 2], 1),
            (vec![2, 2, 2], 1),
        ],
    )
}

/// F-polynomials after mutating along `seq`, by the principal-coefficient
/// recursion `F'_k = (y^{[c_k]_+} Π F_i^{[b_ik]_+} + y^{[-c_k]_+} Π F_i^{[-b_ik]_+}) / F_k`
/// with `B = ε^T`.
pub fn fz_f_polynomials(seed: &Seed, seq: &[usize]) -> Vec<Laurent> {
    let r = seed.rank;
    let eps = seed.exchange_matrix();
    // extended matrix, rows 0..r are B, rows r..2r are C
    let mut bt: Vec<Vec<i64>> = (0..r)
        .map(|i| (0..r).map(|j| eps[j][i]).collect())
        .collect();
    bt.extend((0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect::<Vec<_>>()));
    let mut f: Vec<Laurent> = vec![Laurent::one(r); r];
    for &k in seq {
        let mut plus = Laurent::one(r);
        let mut minus = Laurent::one(r);
        for j in 0..r {
            let c = bt[r + j][k];
            let mut e = vec![0; r];
            e[j] = c.abs();
            let y = Laurent::var_power(&e);
            if c > 0 {
                plus = plus.mul(&y).unwrap();
            } else if c < 0 {
                minus = minus.mul(&y).unwrap();
            }
        }
        for i in 0..r {
            let b = bt[i][k];
            if b > 0 {
                plus = plus.mul(&f[i].pow(b as u32)).unwrap();
            } else if b < 0 {
                minus = minus.mul(&f[i].pow((-b) as u32)).unwrap();
            }
        }
        f[k] = exact_div(&plus.add(&minus).unwrap(), &f[k]).unwrap();
        let old = bt.clone();
        for i in 0..2 * r {
            for j in 0..r {
                bt[i][j] = if i == k || j == k {
                    -old[i][j]
                } else {
                    let (a, b) = (old[i][k], old[k][j]);
                    old[i][j]
                        + if a > 0 && b > 0 {
                            a * b
                        } else if a < 0 && b < 0 {
                            -a * b
                        } else {
                            0
                        }
                };
            }
        }
    }
    f
}

pub fn markov_atlas(depth: usize) -> (FoldingMap, Atlas) {
    let s = s24();
    let fm = fold_seed(&s, vec![vec![3, 4, 5, 0, 1, 2]]).unwrap();
    let dt = DtTransform::new(&s, &green()).unwrap();
    let cross = CrossEdge::folded(&dt, &fm).unwrap();
    let at = build_atilde(&fm.folded, depth, &cross).unwrap();
    (fm, at)
}

pub fn markov() -> Seed {
    Seed::new(
        vec![vec![0, 1, -1], vec![-1, 0, 1], vec![1, -1, 0]],
        vec![2, 2, 2],
    )
    .unwrap()
}

pub fn a2() -> Seed {
    Seed::skew_symmetric(vec![vec![0, 1], vec![-1, 0]]).unwrap()
}

pub fn a3() -> Seed {
    Seed::skew_symmetric(vec![vec![0, 1, 0], vec![-1, 0, -1], vec![0, 1, 0]]).unwrap()
}

pub fn b2() -> Seed {
    Seed::new(vec![vec![0, 1], vec![-1, 0]], vec![2, 1]).unwrap()
}

/// `S²₄` folded by `(1 4)(2 5)(3 6)`.
pub fn s24_fold() -> FoldingMap {
    fold_seed(&s24(), vec![vec![3, 4, 5, 0, 1, 2]]).unwrap()
}

pub fn fixture_text(rel: &str) -> String {
    let p = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(rel);
    std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

pub fn fixture_seed(name: &str) -> Seed {
    Seed::from_json(&fixture_text(&format!("seeds/{name}.json"))).unwrap()
}

/// The 0-based green sequence stored with a seed fixture, if any.
pub fn fixture_sequence(name: &str) -> Option<Vec<usize>> {
    let v: serde_json::Value =
        serde_json::from_str(&fixture_text(&format!("seeds/{name}.json"))).unwrap();
    v.get("green_sequence").map(|s| {
        s.as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_u64().unwrap() as usize - 1)
            .collect()
    })
}

pub const SEED_FIXTURES: [&str; 6] = ["s24", "markov_folded", "a3", "b2", "a2", "kronecker2"];
