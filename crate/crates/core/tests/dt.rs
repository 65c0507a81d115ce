mod common;

use cluster_scatter::atlas::{in_x_variables, prin_m, prin_n, split_x_part, DtTransform};
use cluster_scatter::folding::fold_seed;
use cluster_scatter::lattice::follow_green_sequence;
use common::*;

#[test]
fn s24_sequence_is_maximal_green() {
    assert!(DtTransform::new(&s24(), &green()).is_ok());
}

#[test]
fn s24_dt_matches_reference_f_and_recursion() {
    let s = s24();
    let dt = DtTransform::new(&s, &green()).unwrap();
    let img = dt.apply(&prin_m(&s.basis_vector(0))).unwrap();
    let (m0, p) = split_x_part(&s, &img).unwrap();
    assert_eq!(m0, vec![-1, 0, 0, 0, 0, 0]);
    assert_eq!(p, reference_f());

    // the cluster variable of the final seed with g-vector -f_1
    let last = follow_green_sequence(&s, &green()).unwrap().pop().unwrap();
    let pos = last
        .g_vectors()
        .iter()
        .position(|g| g == &vec![-1, 0, 0, 0, 0, 0])
        .unwrap();
    assert_eq!(fz_f_polynomials(&s, &green())[pos], reference_f());
}

#[test]
fn s24_dt_on_every_generator_matches_recursion() {
    let s = s24();
    let dt = DtTransform::new(&s, &green()).unwrap();
    let last = follow_green_sequence(&s, &green()).unwrap().pop().unwrap();
    let fz = fz_f_polynomials(&s, &green());
    for i in 0..6 {
        let (m0, p) = split_x_part(&s, &dt.apply(&prin_m(&s.basis_vector(i))).unwrap()).unwrap();
        let mut g = vec![0; 6];
        g[i] = -1;
        assert_eq!(m0, g);
        let pos = last.g_vectors().iter().position(|x| x == &g).unwrap();
        assert_eq!(p, fz[pos], "generator {i}");
        assert_eq!(dt.apply(&prin_n(&s.basis_vector(i))).unwrap(), prin_n(&g));
    }
}

#[test]
fn folded_f_and_g() {
    let s = s24();
    let fm = fold_seed(&s, vec![vec![3, 4, 5, 0, 1, 2]]).unwrap();
    let dt = DtTransform::new(&s, &green()).unwrap();
    let img = dt.apply(&prin_m(&s.basis_vector(0))).unwrap();
    let folded = fm.q_tilde(&img).unwrap();
    let (m0, p) = split_x_part(&fm.folded, &folded).unwrap();
    assert_eq!(m0, vec![-1, 0, 0]);
    assert_eq!(p, reference_fbar());
    assert_eq!(
        fm.q_tilde(&in_x_variables(&s, &[])).unwrap(),
        in_x_variables(&fm.folded, &[])
    );

    let up = dt.apply_plus_minus(&prin_m(&s.basis_vector(0))).unwrap();
    let (m0, p) = split_x_part(&fm.folded, &fm.q_tilde(&up).unwrap()).unwrap();
    assert_eq!(m0, vec![1, 0, 0]);
    assert_eq!(p, reference_g());
}

#[test]
fn fold_commutes_with_dt() {
    use cluster_scatter::linalg::qvec;
    use cluster_scatter::scattering::{apply_sequence, Ring};
    let s = s24();
    let fm = fold_seed(&s, vec![vec![3, 4, 5, 0, 1, 2]]).unwrap();
    let dt = DtTransform::new(&s, &green()).unwrap();
    let k = 6;
    let pbar = fm
        .fold_automorphism(
            &dt.plus_minus,
            &qvec(&[101, 103, 107]),
            &qvec(&[-109, -113, -127]),
            k,
        )
        .unwrap();
    for i in 0..6 {
        for z in [prin_m(&s.basis_vector(i)), prin_n(&s.basis_vector(i))] {
            let up = fm.q_tilde(&dt.apply_plus_minus(&z).unwrap()).unwrap();
            let down = apply_sequence(
                &fm.folded,
                Ring::Prin,
                &pbar,
                &fm.q_tilde(&z).unwrap(),
                k as i64,
            )
            .unwrap();
            assert_eq!(
                up.truncate(Ring::Prin.grading(3), k as i64),
                down,
                "generator {i}"
            );
        }
    }
    // F̄ from the folded side alone
    let inv: Vec<_> = pbar.iter().rev().map(|c| c.inverse()).collect();
    let fbar =
        apply_sequence(&fm.folded, Ring::Prin, &inv, &prin_m(&[-1, 0, 0]), k as i64).unwrap();
    let (m0, p) = split_x_part(&fm.folded, &fbar).unwrap();
    assert_eq!(m0, vec![-1, 0, 0]);
    assert_eq!(p, reference_fbar());
}

#[test]
fn markov_atlas_cocycle() {
    use cluster_scatter::atlas::{sample_triples, verify_cocycle_at};
    use cluster_scatter::lattice::Side;
    let (_, at) = markov_atlas(2);
    assert_eq!(at.count(Side::Plus), 10);
    assert_eq!(at.count(Side::Minus), 10);
    let rep = verify_cocycle_at(&at, &sample_triples(&at, 60, 11), 8).unwrap();
    assert!(rep.passed(), "{:?}", rep.failures);
}

#[test]
fn markov_transitions_are_folded_rank_six_transitions() {
    use cluster_scatter::atlas::{along_series, vertex_crossings, SeriesPullback};
    use cluster_scatter::lattice::Side;
    let k = 6;
    let (fm, at) = markov_atlas(2);
    let s = s24();
    let edges = at.series_edges(k).unwrap();
    let upstairs_dt =
        SeriesPullback::from_crossings(&s, &DtTransform::new(&s, &green()).unwrap().plus_minus, k)
            .unwrap();
    let lift = |path: &[usize]| path.iter().flat_map(|&a| [a, a + 3]).collect::<Vec<_>>();
    let plus_root = at.root(Side::Plus);
    for c in &at.charts {
        let folded = along_series(&edges, &at.route(plus_root, c.id).unwrap(), 3, k).unwrap();
        let mut up = SeriesPullback::identity(6, k);
        if c.side == Side::Minus {
            up = upstairs_dt.clone();
        }
        let walk = vertex_crossings(&s, c.side, &lift(&c.vertex.path)).unwrap();
        up = up
            .then(&SeriesPullback::from_crossings(&s, &walk, k).unwrap())
            .unwrap();
        for a in 0..3 {
            let i = fm.action.orbits[a][0];
            assert_eq!(
                fm.q_tilde(&up.units[i]).unwrap(),
                folded.units[a],
                "chart {} orbit {a}",
                c.id
            );
        }
    }
}
