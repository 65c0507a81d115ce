use num_bigint::BigInt;
use num_traits::Signed;

use super::action::{check_admissible, GroupAction};
use crate::error::{Error, Result};
use crate::lattice::{Cone, Seed};
use crate::linalg::{self, QVec, Q};
use crate::poly::{Laurent, MonomialMap, Series1};
use crate::scattering::{
    apply_sequence, crossing_time, equivalence_witness, factorize_along, n_degree, primitive_part,
    sample_general_points, sample_generic_loops, segment_order, Diagram, Ring, Wall, WallCrossing,
};

/// The maps between a seed and its fold by an admissible group action.
#[derive(Clone, Debug)]
pub struct FoldingMap {
    pub seed: Seed,
    pub action: GroupAction,
    pub folded: Seed,
}

/// Outcome of comparing a folded diagram with a directly computed one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldReport {
    pub equivalent: bool,
    pub witness: Option<QVec>,
    pub loops_checked: usize,
    pub loop_failures: usize,
    pub points_checked: usize,
    pub product_failures: usize,
}

impl FoldReport {
    pub fn passed(&self) -> bool {
        self.equivalent && self.loop_failures == 0 && self.product_failures == 0
    }
}

/// Folds `seed` by the group generated by `generators`.
///
/// The folded seed has one index per orbit, form `{ē_a, ē_b} = {e_i, e_j}` for
/// representatives, and multipliers `|orbit| · d_i`.
pub fn fold_seed(seed: &Seed, generators: Vec<Vec<usize>>) -> Result<FoldingMap> {
    let action = check_admissible(seed, generators)?;
    let reps: Vec<usize> = action.orbits.iter().map(|o| o[0]).collect();
    let skew = reps
        .iter()
        .map(|&i| reps.iter().map(|&j| seed.skew[i][j]).collect())
        .collect();
    let d = action
        .orbits
        .iter()
        .map(|o| o.len() as i64 * seed.d[o[0]])
        .collect();
    let mut folded = Seed::new(skew, d)?;
    folded.frozen = reps
        .iter()
        .enumerate()
        .filter(|(_, &i)| seed.is_frozen(i))
        .map(|(a, _)| a)
        .collect();
    folded.labels = action
        .orbits
        .iter()
        .map(|o| {
            o.iter()
                .map(|&i| {
                    seed.labels
                        .get(i)
                        .cloned()
                        .unwrap_or_else(|| (i + 1).to_string())
                })
                .collect::<Vec<_>>()
                .join("+")
        })
        .collect();
    Ok(FoldingMap {
        seed: seed.clone(),
        action,
        folded,
    })
}

impl FoldingMap {
    pub fn rank(&self) -> usize {
        self.seed.rank
    }

    pub fn folded_rank(&self) -> usize {
        self.folded.rank
    }

    /// `q : N → N̄`, `e_i ↦ ē_{Πi}`.
    pub fn q(&self, n: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.folded_rank()];
        for (i, &x) in n.iter().enumerate() {
            out[self.action.orbit_of[i]] += x;
        }
        out
    }

    /// `s^* : M° → M̄°` in the `f` bases, `f_i ↦ f̄_{Πi}`.
    pub fn s_star(&self, m: &[i64]) -> Vec<i64> {
        self.q(m)
    }

    /// `q^* : M̄_R → M_R`, the dual of `q`.
    pub fn q_star(&self, x: &[Q]) -> QVec {
        (0..self.rank())
            .map(|i| {
                let a = self.action.orbit_of[i];
                &x[a] / Q::from_integer(BigInt::from(self.action.orbits[a].len()))
            })
            .collect()
    }

    fn q_star_matrix(&self) -> Vec<QVec> {
        let rb = self.folded_rank();
        (0..self.rank())
            .map(|i| {
                let a = self.action.orbit_of[i];
                (0..rb)
                    .map(|b| {
                        if a == b {
                            Q::new(BigInt::from(1), BigInt::from(self.action.orbits[a].len()))
                        } else {
                            linalg::q(0)
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// `φ = s^* ⊕ q` on exponents `(m, n)` of the principal ring.
    pub fn phi(&self) -> MonomialMap {
        let r = self.rank();
        let rows: Vec<Vec<i64>> = (0..self.folded_rank())
            .map(|a| {
                (0..r)
                    .map(|i| i64::from(self.action.orbit_of[i] == a))
                    .collect()
            })
            .collect();
        let half = MonomialMap::new(rows, r).expect("orbit-sum rows");
        MonomialMap::block_diag(&half, &half)
    }

    /// `q̃`: the fold of a principal-ring Laurent polynomial.
    pub fn q_tilde(&self, f: &Laurent) -> Result<Laurent> {
        self.phi().apply(f)
    }

    /// Checks `<q n, x̄> = <n, q^* x̄>` and `s^* {n, ·} = {q n, ·}` on basis vectors.
    pub fn check_compatibility(&self) -> Result<()> {
        let rb = self.folded_rank();
        for i in 0..self.rank() {
            let n = self.seed.basis_vector(i);
            for a in 0..rb {
                let x = self
                    .folded
                    .basis_vector(a)
                    .iter()
                    .map(|&v| linalg::q(v))
                    .collect::<QVec>();
                if self.folded.pair(&self.q(&n), &x) != self.seed.pair(&n, &self.q_star(&x)) {
                    return Err(Error::Input(format!(
                        "pairing not preserved at e_{i}, f̄_{a}"
                    )));
                }
            }
            if self.s_star(&self.seed.p_star(&n)) != self.folded.p_star(&self.q(&n)) {
                return Err(Error::Input(format!("skew form not preserved at e_{i}")));
            }
        }
        Ok(())
    }

    /// Fixed direction in `M_R` used to resolve walls met only along their boundary.
    fn tilt(&self) -> QVec {
        (0..self.rank())
            .map(|i| {
                linalg::q(if i % 2 == 0 { 1 } else { -1 } * (2 * i as i64 + 3).pow(2) + i as i64)
            })
            .collect()
    }

    /// `v` projected into `n^⊥` along the Euclidean normal of `n^⊥` in `f` coordinates.
    fn tilt_in(&self, n: &[i64]) -> QVec {
        let v = self.tilt();
        let nv = self.seed.normal(n);
        let c = linalg::dot(&nv, &v) / linalg::dot(&nv, &nv);
        linalg::sub(&v, &linalg::scale(&c, &nv))
    }

    /// `f(t^ℓ)^ℓ` for `q(n0) = ℓ n̄0`: the contribution of one wall to the fold.
    fn folded_function(&self, w: &Wall, order: u32) -> Result<(Vec<i64>, Series1)> {
        let (normal, ell) = primitive_part(&self.q(&w.normal));
        let max = (order as i64 / n_degree(&normal)) as usize;
        let func = w.func.dilate(ell as usize, max).pow_int(ell, max)?;
        Ok((normal, func))
    }

    /// Pullback of a wall along `q^*`, if it stays codimension one.
    ///
    /// When the pullback lies in the boundary of the support, the wall is kept
    /// only if the tilt direction points into the support.
    pub fn fold_wall(&self, w: &Wall, order: u32) -> Result<Option<Wall>> {
        let (ineqs, eqs) = w.support.hrep();
        let mt = linalg::transpose(&self.q_star_matrix());
        let pull = |a: &QVec| linalg::mat_vec(&mt, a);
        let rb = self.folded_rank();
        let support = Cone::from_hrep(
            &ineqs.iter().map(pull).collect::<Vec<_>>(),
            &eqs.iter().map(pull).collect::<Vec<_>>(),
            rb,
        );
        if support.dimension() + 1 != rb {
            return Ok(None);
        }
        let y = self.q_star(&support.relint_point());
        let v = self.tilt_in(&w.normal);
        for a in &ineqs {
            if linalg::sign(&linalg::dot(a, &y)) == 0 {
                match linalg::sign(&linalg::dot(a, &v)) {
                    1 => {}
                    -1 => return Ok(None),
                    _ => {
                        return Err(Error::NonGeneric(format!(
                            "tilt lies in a facet of the wall with normal {:?}",
                            w.normal
                        )))
                    }
                }
            }
        }
        let (normal, func) = self.folded_function(w, order)?;
        Ok(Some(Wall::new(&self.folded, normal, support, func)?))
    }

    /// The folded diagram: every wall pulled back along `q^*`.
    pub fn fold_diagram(&self, d: &Diagram) -> Result<Diagram> {
        if d.seed != self.seed {
            return Err(Error::Input(
                "diagram seed differs from the folding seed".into(),
            ));
        }
        let mut out = Diagram::new(self.folded.clone(), d.order);
        for w in d.nontrivial_walls() {
            if let Some(fw) = self.fold_wall(w, d.order)? {
                out.push(fw)?;
            }
        }
        Ok(out)
    }

    /// Folds an ordered product of `+1` crossings term by term, merging
    /// neighbours with equal folded normal.
    pub fn fold_crossings(&self, seq: &[WallCrossing], order: u32) -> Result<Vec<WallCrossing>> {
        let mut out: Vec<WallCrossing> = Vec::new();
        for c in seq {
            let (normal, ell) = primitive_part(&self.q(&c.normal));
            let max = (order as i64 / n_degree(&normal)) as usize;
            let f = c
                .func
                .dilate(ell as usize, max)
                .pow_int(ell * c.sign, max)?;
            match out.last_mut() {
                Some(prev) if prev.normal == normal => prev.func = prev.func.mul(&f, max),
                _ => out.push(WallCrossing::new(normal, f, 1)),
            }
        }
        out.retain(|c| !c.func.is_one());
        Ok(out)
    }

    /// The folded image of an invariant automorphism `p`, at order `k`.
    ///
    /// `p` is factored along the segment `q^* a → q^* b` inside the invariant
    /// subspace; orbit-mates are crossed together there, so the factors fold.
    pub fn fold_automorphism(
        &self,
        p: &[WallCrossing],
        a: &[Q],
        b: &[Q],
        k: u32,
    ) -> Result<Vec<WallCrossing>> {
        let (ua, ub) = (self.q_star(a), self.q_star(b));
        let order = segment_order(&self.seed, &ua, &ub, k)?;
        for pair in order.windows(2) {
            let (t0, t1) = (
                crossing_time(&self.seed, &pair[0], &ua, &ub),
                crossing_time(&self.seed, &pair[1], &ua, &ub),
            );
            if t0 == t1
                && primitive_part(&self.q(&pair[0])).0 != primitive_part(&self.q(&pair[1])).0
            {
                return Err(Error::NonGeneric(format!(
                    "segment meets {:?} and {:?} at one point",
                    pair[0], pair[1]
                )));
            }
        }
        let fac = factorize_along(&self.seed, p, order, k)?;
        self.fold_crossings(&fac.sequence(), k)
    }

    /// `z^{(Σ_{i ∈ O_a} d_i f_i, 0)}`, the invariant monomial of orbit `a`.
    pub fn orbit_monomial(&self, a: usize) -> Laurent {
        let r = self.rank();
        let mut m = vec![0; r];
        for &i in &self.action.orbits[a] {
            m[i] = self.seed.d[i];
        }
        Laurent::var_power(&Ring::prin_exp(&m, &vec![0; r]))
    }

    /// Compares, across the folded wall through `x̄`, the folded crossing with
    /// `φ` of the crossing in `d` along a slightly displaced short path
    /// through `q^* x̄`. Acts on the invariant monomials.
    pub fn crossing_agrees_at(&self, d: &Diagram, folded: &Diagram, x: &[Q]) -> Result<bool> {
        let pf = folded.g_x(x)?;
        let nb = match &pf {
            Some(pf) => self.folded.normal(&pf.normal),
            None => self.tilt()[..self.folded_rank()].to_vec(),
        };
        let scale = x
            .iter()
            .map(|c| c.abs())
            .fold(linalg::q(1), |a, b| if b > a { b } else { a });
        let delta = scale / linalg::q(1_000_000);
        let lo = linalg::sub(x, &linalg::scale(&delta, &nb));
        let hi = linalg::add(x, &linalg::scale(&delta, &nb));
        let folded_path = vec![lo.clone(), hi.clone()];
        let phi = self.phi();
        let eps = &delta / linalg::q(1000);
        for shift in 0..4i64 {
            let w: QVec = self
                .tilt()
                .iter()
                .enumerate()
                .map(|(i, t)| t + linalg::q(shift * (i as i64 + 1)))
                .collect();
            let offset = linalg::scale(&eps, &w);
            let path = vec![
                linalg::add(&self.q_star(&lo), &offset),
                linalg::add(&self.q_star(&hi), &offset),
            ];
            let seq = match d.path_sequence(&path) {
                Ok(s) => s,
                Err(Error::NonGeneric(_)) => continue,
                Err(e) => return Err(e),
            };
            for a in 0..self.folded_rank() {
                let z = self.orbit_monomial(a);
                let up = phi.apply(&apply_sequence(
                    &d.seed,
                    Ring::Prin,
                    &seq,
                    &z,
                    d.order as i64,
                )?)?;
                let down = folded.path_product(&folded_path, Ring::Prin, &phi.apply(&z)?)?;
                if up != down {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        Err(Error::NonGeneric(format!(
            "no generic displacement found at {}",
            linalg::fmt_vec(x)
        )))
    }

    /// Compares the fold of `d` with `direct`, a diagram for the folded seed.
    ///
    /// Checks equivalence, consistency of the folded diagram around sampled
    /// loops, and wall crossings against displaced crossings in `d` at sampled points.
    pub fn verify_folded_equivalence(
        &self,
        d: &Diagram,
        direct: &Diagram,
        samples: usize,
        rng_seed: u64,
    ) -> Result<FoldReport> {
        let folded = self.fold_diagram(d)?;
        self.compare(&folded, d, direct, samples, rng_seed)
    }

    /// As [`FoldingMap::verify_folded_equivalence`], with the folded diagram given.
    pub fn compare(
        &self,
        folded: &Diagram,
        d: &Diagram,
        direct: &Diagram,
        samples: usize,
        rng_seed: u64,
    ) -> Result<FoldReport> {
        let witness = equivalence_witness(folded, direct)?;
        let loops = sample_generic_loops(folded, samples, 4, rng_seed);
        let mut loop_failures = 0;
        for l in &loops {
            if folded.loop_defect(l)?.is_some() {
                loop_failures += 1;
            }
        }
        let points = sample_general_points(folded, samples, rng_seed);
        let mut product_failures = 0;
        for x in &points {
            if !self.crossing_agrees_at(d, folded, x)? {
                product_failures += 1;
            }
        }
        Ok(FoldReport {
            equivalent: witness.is_none(),
            witness,
            loops_checked: loops.len(),
            loop_failures,
            points_checked: points.len(),
            product_failures,
        })
    }
}

/// `f(t) ↦ f(t)` with one coefficient changed, for negative controls.
pub fn perturb(f: &Series1, j: usize, delta: i64) -> Series1 {
    let mut c = f.coeffs().to_vec();
    if c.len() <= j {
        c.resize(j + 1, BigInt::from(0));
    }
    c[j] += BigInt::from(delta);
    Series1::from_coeffs(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qvec;
    use crate::scattering::{complete_rank2, finite_type_diagram};

    fn a3() -> Seed {
        Seed::skew_symmetric(vec![vec![0, 1, 0], vec![-1, 0, -1], vec![0, 1, 0]]).unwrap()
    }

    fn b2() -> Seed {
        Seed::new(vec![vec![0, 1], vec![-1, 0]], vec![2, 1]).unwrap()
    }

    fn s24() -> Seed {
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

    #[test]
    fn a3_folds_to_b2() {
        let fm = fold_seed(&a3(), vec![vec![2, 1, 0]]).unwrap();
        assert_eq!(fm.folded.skew, b2().skew);
        assert_eq!(fm.folded.d, vec![2, 1]);
        assert_eq!(fm.folded.exchange_matrix(), vec![vec![0, 1], vec![-2, 0]]);
        fm.check_compatibility().unwrap();
    }

    #[test]
    fn s24_folds_to_markov() {
        let fm = fold_seed(&s24(), vec![vec![3, 4, 5, 0, 1, 2]]).unwrap();
        assert_eq!(
            fm.folded.skew,
            vec![vec![0, 1, -1], vec![-1, 0, 1], vec![1, -1, 0]]
        );
        assert_eq!(fm.folded.d, vec![2, 2, 2]);
        fm.check_compatibility().unwrap();
        let p = fm.phi();
        assert_eq!(
            p.apply_exp(&[1, 0, 0, 1, 0, 0, 0, 2, 0, 0, 1, 0]),
            vec![2, 0, 0, 0, 3, 0]
        );
    }

    #[test]
    fn trivial_group_is_identity() {
        let fm = fold_seed(&a3(), vec![]).unwrap();
        assert_eq!(fm.folded.skew, a3().skew);
        assert_eq!(fm.folded.d, a3().d);
        let d = finite_type_diagram(&a3(), 5, 12).unwrap();
        let r = fm.verify_folded_equivalence(&d, &d, 10, 1).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn pullback_matches_dual() {
        let fm = fold_seed(&a3(), vec![vec![2, 1, 0]]).unwrap();
        let x = qvec(&[4, -3]);
        let y = fm.q_star(&x);
        assert_eq!(y, vec![linalg::q(2), linalg::q(-3), linalg::q(2)]);
    }

    #[test]
    fn a3_diagram_folds_to_b2_diagram() {
        let k = 8;
        let fm = fold_seed(&a3(), vec![vec![2, 1, 0]]).unwrap();
        let d = finite_type_diagram(&a3(), k, 12).unwrap();
        let direct = complete_rank2(&Diagram::initial(&b2(), k), k).unwrap();
        let r = fm.verify_folded_equivalence(&d, &direct, 20, 5).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.loops_checked > 0 && r.points_checked > 0);
        let finite_b2 = finite_type_diagram(&b2(), k, 12).unwrap();
        assert!(fm
            .verify_folded_equivalence(&d, &finite_b2, 20, 6)
            .unwrap()
            .passed());
    }

    #[test]
    fn corrupted_fold_is_detected() {
        let k = 6;
        let fm = fold_seed(&a3(), vec![vec![2, 1, 0]]).unwrap();
        let d = finite_type_diagram(&a3(), k, 12).unwrap();
        let direct = finite_type_diagram(&b2(), k, 12).unwrap();
        let mut folded = fm.fold_diagram(&d).unwrap();
        folded.walls[0].func = perturb(&folded.walls[0].func, 1, 1);
        let r = fm.compare(&folded, &d, &direct, 20, 5).unwrap();
        assert!(!r.equivalent);
        assert!(r.witness.is_some());
        assert!(!r.passed());
    }

    #[test]
    fn invariant_normal_contributes_power() {
        let s = Seed::skew_symmetric(vec![vec![0, 0], vec![0, 0]]).unwrap();
        let fm = fold_seed(&s, vec![vec![1, 0]]).unwrap();
        let mut d = Diagram::new(s.clone(), 6);
        d.push(Wall::hyperplane(&s, vec![1, 1], Series1::from_i64(&[1, 1])).unwrap())
            .unwrap();
        let folded = fm.fold_diagram(&d).unwrap();
        assert_eq!(folded.walls[0].func, Series1::from_i64(&[1, 0, 2, 0, 1]));
        let origin = vec![linalg::q(0)];
        assert!(fm.crossing_agrees_at(&d, &folded, &origin).unwrap());
        let mut dilated_only = folded.clone();
        dilated_only.walls[0].func = Series1::from_i64(&[1, 0, 1]);
        assert!(!fm.crossing_agrees_at(&d, &dilated_only, &origin).unwrap());
    }
}
