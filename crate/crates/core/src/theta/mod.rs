//! Theta functions from broken lines, and the path-product route to the same expansions.

mod broken;

pub use broken::{
    check_generic_endpoint, enumerate_broken_lines, Bend, BrokenLine, Segment, ThetaExpansion,
};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice::Seed;
use crate::linalg::{self, QVec, Q};
use crate::poly::{Laurent, MonomialMap};
use crate::scattering::{complete_rank2, Diagram, Ring};

/// `ϑ_{p0, q}` truncated `k` above the degree of `p0`, as the sum of final
/// monomials of all broken lines.
pub fn theta_expand(d: &Diagram, p0: &[i64], q: &[Q], k: u32) -> Result<ThetaExpansion> {
    let lines = enumerate_broken_lines(d, p0, q, k)?;
    let mut poly = Laurent::zero(2 * d.rank());
    for l in &lines {
        let (c, e) = l.final_monomial();
        poly.add_term(e.to_vec(), c.clone());
    }
    Ok(ThetaExpansion {
        p0: p0.to_vec(),
        endpoint: q.to_vec(),
        order: k,
        lines: lines.len(),
        poly,
    })
}

/// `z^{p0}` transported along the polyline `waypoints` by wall crossings,
/// truncated `k` above the degree of `p0`.
///
/// Equals `ϑ_{p0}` at the last waypoint when the first lies in a chamber
/// where `ϑ_{p0} = z^{p0}`.
pub fn theta_by_transport(d: &Diagram, p0: &[i64], waypoints: &[QVec], k: u32) -> Result<Laurent> {
    let g = Ring::Prin.grading(d.rank());
    let z = Laurent::var_power(p0);
    let base = z.min_degree(g).unwrap_or(0);
    let seq = d.path_sequence(waypoints)?;
    crate::scattering::apply_sequence(&d.seed, Ring::Prin, &seq, &z, base + k as i64)
}

/// Applies the crossings met along `waypoints` to `f`, truncated at `max_deg`.
pub fn transport(d: &Diagram, waypoints: &[QVec], f: &Laurent, max_deg: i64) -> Result<Laurent> {
    let seq = d.path_sequence(waypoints)?;
    crate::scattering::apply_sequence(&d.seed, Ring::Prin, &seq, f, max_deg)
}

/// Perturbation directions tried, in order, when a basepoint must be moved off the walls.
fn perturbations(r: usize) -> Vec<QVec> {
    let primes = [
        101i64, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157,
    ];
    (0..4)
        .map(|s| {
            (0..r)
                .map(|i| {
                    Q::new(
                        BigInt::from(
                            primes[(i + 3 * s) % primes.len()]
                                * if (i + s) % 2 == 0 { 1 } else { -1 },
                        ),
                        BigInt::from(997),
                    )
                })
                .collect()
        })
        .collect()
}

/// Structure constant `α(p, q; r)`: the coefficient of `z^r` in `ϑ_p · ϑ_q`,
/// both expanded at a generic point near the `M` part of `r`.
///
/// `k` bounds the broken-line degree of each factor.
pub fn structure_constant(d: &Diagram, p: &[i64], q: &[i64], r: &[i64], k: u32) -> Result<BigInt> {
    let rank = d.rank();
    for e in [p, q, r] {
        if e.len() != 2 * rank {
            return Err(Error::DimensionMismatch {
                expected: 2 * rank,
                got: e.len(),
            });
        }
    }
    let centre = linalg::qvec(&r[..rank]);
    let mut last = None;
    for v in perturbations(rank) {
        for eps in [
            Q::new(1.into(), 1000.into()),
            Q::new(1.into(), 100_000.into()),
        ] {
            let z = linalg::add(&centre, &linalg::scale(&eps, &v));
            if check_generic_endpoint(d, &z).is_err() {
                continue;
            }
            let attempt = theta_expand(d, p, &z, k).and_then(|a| {
                let b = theta_expand(d, q, &z, k)?;
                Ok(a.poly.mul(&b.poly)?.coeff(r))
            });
            match attempt {
                Err(Error::NonGeneric(s)) => last = Some(s),
                other => return other,
            }
        }
    }
    Err(Error::NonGeneric(
        last.unwrap_or_else(|| "no generic basepoint near r".into()),
    ))
}

/// The rank-2 seed with `{e_1, e_2} = 1` and multipliers `(2, 2)`.
pub fn kronecker_seed() -> Seed {
    Seed::new(vec![vec![0, 1], vec![-1, 0]], vec![2, 2]).expect("valid seed")
}

/// Consistent diagram of [`kronecker_seed`] at order `k`.
pub fn kronecker_diagram(k: u32) -> Result<Diagram> {
    let s = kronecker_seed();
    complete_rank2(&Diagram::initial(&s, k), k)
}

/// Exponent map from the principal ring of a rank-2 sub-seed on indices
/// `(i, j)` of `seed` into the principal ring of `seed`: `(m, n)` goes to the
/// exponent with the same `f_i, f_j, e_i, e_j` components and the remaining
/// `M` components fixed by `({n, ·}, n)`.
pub fn subseed_embedding(seed: &Seed, sub: &Seed, idx: &[usize]) -> Result<MonomialMap> {
    let r = seed.rank;
    let s = sub.rank;
    if idx.len() != s {
        return Err(Error::DimensionMismatch {
            expected: s,
            got: idx.len(),
        });
    }
    for (a, &i) in idx.iter().enumerate() {
        if i >= r {
            return Err(Error::IndexOutOfRange { index: i, rank: r });
        }
        for (b, &j) in idx.iter().enumerate() {
            if sub.exchange(a, b) != seed.exchange(i, j) {
                return Err(Error::Input(format!(
                    "indices {idx:?} do not span a copy of the sub-seed"
                )));
            }
        }
    }
    let mut rows = vec![vec![0; 2 * s]; 2 * r];
    for (a, &i) in idx.iter().enumerate() {
        rows[i][a] = 1;
        rows[r + i][s + a] = 1;
    }
    for c in 0..r {
        if idx.contains(&c) {
            continue;
        }
        for (a, &i) in idx.iter().enumerate() {
            rows[c][s + a] = seed.exchange(i, c);
        }
    }
    MonomialMap::new(rows, 2 * s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::{in_x_variables, DtTransform};
    use crate::linalg::qvec;
    use crate::scattering::finite_type_diagram;

    fn a2() -> Seed {
        Seed::skew_symmetric(vec![vec![0, 1], vec![-1, 0]]).unwrap()
    }

    fn markov() -> Seed {
        Seed::new(
            vec![vec![0, 1, -1], vec![-1, 0, 1], vec![1, -1, 0]],
            vec![2, 2, 2],
        )
        .unwrap()
    }

    #[test]
    fn kronecker_theta_has_three_lines() {
        let d = kronecker_diagram(6).unwrap();
        let p0 = [1, -1, 0, 0];
        let t = theta_expand(&d, &p0, &qvec(&[7, 5]), 6).unwrap();
        assert_eq!(t.lines, 3);
        let expected = in_x_variables(
            &d.seed,
            &[(vec![0, 0], 1), (vec![0, 1], 1), (vec![1, 1], 1)],
        )
        .mul_monomial(&p0, &1.into());
        assert_eq!(t.poly, expected);
        assert!(t.is_positive());
    }

    #[test]
    fn kronecker_theta_embeds_in_markov() {
        let m = markov();
        let k = kronecker_seed();
        let emb = subseed_embedding(&m, &k, &[0, 1]).unwrap();
        assert_eq!(emb.apply_exp(&[1, 2, 3, 4]), vec![1, 2, -6 + 8, 3, 4, 0]);
        let d = kronecker_diagram(6).unwrap();
        let t = theta_expand(&d, &[1, -1, 0, 0], &qvec(&[3, 11]), 6).unwrap();
        let p0 = [1, -1, 0, 0, 0, 0];
        let expected = in_x_variables(
            &m,
            &[(vec![0, 0, 0], 1), (vec![0, 1, 0], 1), (vec![1, 1, 0], 1)],
        )
        .mul_monomial(&p0, &1.into());
        assert_eq!(emb.apply(&t.poly).unwrap(), expected);
    }

    #[test]
    fn initial_exponent_in_n_gives_one_line() {
        let d = finite_type_diagram(&a2(), 6, 10).unwrap();
        let t = theta_expand(&d, &[0, 0, 1, 0], &qvec(&[-3, 5]), 6).unwrap();
        assert_eq!(t.lines, 1);
        assert_eq!(t.poly, Laurent::var_power(&[0, 0, 1, 0]));
    }

    #[test]
    fn a2_chamber_theta_is_monomial_and_transports() {
        let d = finite_type_diagram(&a2(), 6, 10).unwrap();
        let p0 = [1, 0, 0, 0];
        // ϑ is z^{p0} at points of the positive chamber
        let here = theta_expand(&d, &p0, &qvec(&[5, 3]), 6).unwrap();
        assert_eq!(here.poly, Laurent::var_power(&p0));
        for q in [
            qvec(&[-5, 3]),
            qvec(&[-7, -2]),
            qvec(&[3, -11]),
            qvec(&[-1, 4]),
        ] {
            let bl = theta_expand(&d, &p0, &q, 6).unwrap();
            let path = theta_by_transport(&d, &p0, &[qvec(&[5, 3]), q.clone()], 6).unwrap();
            assert_eq!(bl.poly, path, "at {q:?}");
        }
    }

    #[test]
    fn a2_negative_generator_matches_dt_route() {
        let s = a2();
        let d = finite_type_diagram(&s, 8, 10).unwrap();
        let p0 = [-1, 0, 0, 0];
        let dt = DtTransform::new(&s, &[0, 1]).unwrap();
        let oracle = dt.apply_minus_plus(&Laurent::var_power(&p0)).unwrap();
        let bl = theta_expand(&d, &p0, &qvec(&[3, 5]), 8).unwrap();
        assert_eq!(bl.poly, oracle);
    }

    #[test]
    fn chamber_independence_up_to_transport() {
        let d = kronecker_diagram(8).unwrap();
        let p0 = [1, -1, 0, 0];
        let qa = qvec(&[7, 5]);
        let qb = qvec(&[-3, 7]);
        let a = theta_expand(&d, &p0, &qa, 8).unwrap();
        let b = theta_expand(&d, &p0, &qb, 8).unwrap();
        let g = Ring::Prin.grading(2);
        let moved = transport(&d, &[qa, qb], &a.poly, 8).unwrap();
        assert_eq!(moved.truncate(g, 8), b.poly.truncate(g, 8));
    }

    #[test]
    fn structure_constants_of_a2() {
        let d = finite_type_diagram(&a2(), 6, 10).unwrap();
        // ϑ_{f1} ϑ_{f2} = ϑ_{f1+f2} in the positive chamber
        assert_eq!(
            structure_constant(&d, &[1, 0, 0, 0], &[0, 1, 0, 0], &[1, 1, 0, 0], 6).unwrap(),
            1.into()
        );
        assert_eq!(
            structure_constant(&d, &[1, 0, 0, 0], &[0, 1, 0, 0], &[2, 1, 0, 0], 6).unwrap(),
            0.into()
        );
    }

    #[test]
    fn rejects_endpoint_on_a_wall() {
        let d = finite_type_diagram(&a2(), 4, 10).unwrap();
        assert!(matches!(
            theta_expand(&d, &[1, 0, 0, 0], &qvec(&[0, 3]), 4),
            Err(Error::NonGeneric(_))
        ));
    }
}
