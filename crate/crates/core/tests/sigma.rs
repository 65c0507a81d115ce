mod common;

use cluster_scatter::atlas::{mutation_route, sigma_conjugated_crossing, sigma_star};
use cluster_scatter::lattice::Seed;
use cluster_scatter::poly::{Laurent, RationalExpr};
use cluster_scatter::scattering::Ring;
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `z^{(−m,−n)} (1 + z^{−({e_k,·}, e_k)})^{<d_k e_k, m>}`.
fn closed_form(seed: &Seed, k: usize, e: &[i64]) -> RationalExpr {
    let nv = 2 * seed.rank;
    let xk: Vec<i64> = Ring::Prin
        .lift(seed, &seed.basis_vector(k))
        .iter()
        .map(|x| -x)
        .collect();
    let neg: Vec<i64> = e.iter().map(|x| -x).collect();
    let base = RationalExpr::from_laurent(Laurent::var_power(&xk))
        .add(&RationalExpr::constant(nv, 1))
        .unwrap();
    RationalExpr::from_laurent(Laurent::var_power(&neg))
        .mul(&base.pow(e[k]).unwrap())
        .unwrap()
}

#[test]
fn markov_first_generator() {
    let m = markov();
    let e = [1, 0, 0, 0, 0, 0];
    let got = sigma_conjugated_crossing(&m, 0, &e).unwrap();
    assert_eq!(got, closed_form(&m, 0, &e));
    // the exponent <d_1 e_1, f_1> is 1; it is 2 for d_1 f_1
    let x1 = Ring::Prin.lift(&m, &[-1, 0, 0]);
    let expected = RationalExpr::from_laurent(
        Laurent::var_power(&[-1, 0, 0, 0, 0, 0])
            .mul(&Laurent::var_power(&x1).add(&Laurent::one(6)).unwrap())
            .unwrap(),
    );
    assert_eq!(got, expected);
    let twice = sigma_conjugated_crossing(&m, 0, &[2, 0, 0, 0, 0, 0]).unwrap();
    assert_eq!(
        twice,
        RationalExpr::from_laurent(
            Laurent::var_power(&[-2, 0, 0, 0, 0, 0])
                .mul(
                    &Laurent::var_power(&x1)
                        .add(&Laurent::one(6))
                        .unwrap()
                        .pow(2)
                )
                .unwrap()
        )
    );
}

#[test]
fn orthogonal_exponent_is_pure_inversion() {
    let m = markov();
    let e = [0, 3, -2, 1, 0, 4];
    let inv = RationalExpr::from_laurent(Laurent::var_power(&[0, -3, 2, -1, 0, -4]));
    assert_eq!(sigma_conjugated_crossing(&m, 0, &e).unwrap(), inv);
    assert_eq!(mutation_route(&m, 0, &e).unwrap(), inv);
}

#[test]
fn inversion_is_an_involution() {
    let s = sigma_star(3);
    let f = Laurent::var_power(&[1, -2, 0, 3, 0, -1])
        .add(&Laurent::one(6))
        .unwrap();
    assert_eq!(s.apply(&s.apply(&f).unwrap()).unwrap(), f);
}

#[test]
fn both_routes_match_closed_form_on_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for seed in [markov(), a2(), b2()] {
        let r = seed.rank;
        for _ in 0..15 {
            let k = rng.gen_range(0..r);
            let e: Vec<i64> = (0..2 * r).map(|_| rng.gen_range(-2..=2)).collect();
            let want = closed_form(&seed, k, &e);
            assert_eq!(
                sigma_conjugated_crossing(&seed, k, &e).unwrap(),
                want,
                "k={k} e={e:?}"
            );
            assert_eq!(mutation_route(&seed, k, &e).unwrap(), want, "k={k} e={e:?}");
        }
    }
}
