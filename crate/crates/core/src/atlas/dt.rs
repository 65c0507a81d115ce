use super::charts::{crossing_pullback, vertex_crossings};
use crate::error::{Error, Result};
use crate::lattice::{follow_green_sequence, Seed, Side};
use crate::poly::{Laurent, MonomialMap, RationalExpr, Series1};
use crate::scattering::{apply_stable, Ring, WallCrossing};

/// Crossings of the c-vector walls along a green sequence, each with sign `+1`.
///
/// Their composition, first crossing first, is `𝔭_{+,−}`.
pub fn green_crossings(seed: &Seed, seq: &[usize]) -> Result<Vec<WallCrossing>> {
    let path = follow_green_sequence(seed, seq)?;
    Ok(seq
        .iter()
        .zip(&path)
        .map(|(&k, ps)| {
            WallCrossing::new(
                ps.c_vectors()[k].clone(),
                Series1::binomial(seed.d[k] as u32),
                1,
            )
        })
        .collect())
}

/// Reverses a crossing sequence and inverts each crossing.
pub fn reverse_inverse(seq: &[WallCrossing]) -> Vec<WallCrossing> {
    seq.iter().rev().map(WallCrossing::inverse).collect()
}

/// `Σ^*`: `z^{(m, n)} ↦ z^{(−m, −n)}`.
pub fn sigma_star(rank: usize) -> MonomialMap {
    MonomialMap::inversion(2 * rank)
}

/// The DT transformation `𝔭_{−,+} ∘ Σ^*` realized by a maximal green sequence.
#[derive(Clone, Debug)]
pub struct DtTransform {
    pub seed: Seed,
    pub sequence: Vec<usize>,
    /// `𝔭_{+,−}` as crossings, first applied first.
    pub plus_minus: Vec<WallCrossing>,
    pub max_order: u32,
}

impl DtTransform {
    pub fn new(seed: &Seed, seq: &[usize]) -> Result<DtTransform> {
        let path = follow_green_sequence(seed, seq)?;
        if !path.last().is_some_and(|p| p.all_red()) {
            return Err(Error::NotMaximalGreen);
        }
        Ok(DtTransform {
            seed: seed.clone(),
            sequence: seq.to_vec(),
            plus_minus: green_crossings(seed, seq)?,
            max_order: 40,
        })
    }

    /// `𝔭_{−,+}` as crossings.
    pub fn minus_plus(&self) -> Vec<WallCrossing> {
        reverse_inverse(&self.plus_minus)
    }

    /// `DT(f) = 𝔭_{−,+}(Σ^* f)`.
    pub fn apply(&self, f: &Laurent) -> Result<Laurent> {
        let g = sigma_star(self.seed.rank).apply(f)?;
        apply_stable(&self.seed, &self.minus_plus(), &g, 4, 2, self.max_order)
    }

    /// `DT^{-1}(f) = Σ^*(𝔭_{+,−}(f))`.
    pub fn apply_inverse(&self, f: &Laurent) -> Result<Laurent> {
        let g = apply_stable(&self.seed, &self.plus_minus, f, 4, 2, self.max_order)?;
        sigma_star(self.seed.rank).apply(&g)
    }

    /// `𝔭_{+,−}(f)`, the reverse-inverse realization.
    pub fn apply_plus_minus(&self, f: &Laurent) -> Result<Laurent> {
        apply_stable(&self.seed, &self.plus_minus, f, 4, 2, self.max_order)
    }

    /// `𝔭_{−,+}(f)`.
    pub fn apply_minus_plus(&self, f: &Laurent) -> Result<Laurent> {
        apply_stable(&self.seed, &self.minus_plus(), f, 4, 2, self.max_order)
    }
}

/// `z^{(m, 0)}` in the principal ring.
pub fn prin_m(m: &[i64]) -> Laurent {
    Laurent::var_power(&Ring::prin_exp(m, &vec![0; m.len()]))
}

/// `z^{(0, n)}` in the principal ring.
pub fn prin_n(n: &[i64]) -> Laurent {
    Laurent::var_power(&Ring::prin_exp(&vec![0; n.len()], n))
}

/// `Σ c · Π x_j^{a_j}` with `x_j = z^{({e_j, ·}, e_j)}`, from exponent vectors `a`.
pub fn in_x_variables(seed: &Seed, terms: &[(Vec<i64>, i64)]) -> Laurent {
    let r = seed.rank;
    Laurent::from_terms(
        2 * r,
        terms
            .iter()
            .map(|(a, c)| (Ring::Prin.lift(seed, a), (*c).into())),
    )
}

/// Rewrites a principal-ring polynomial `z^{(m0, 0)} · P(x)` as `(m0, P)`,
/// with `P` in the variables `x_j = z^{({e_j, ·}, e_j)}`.
pub fn split_x_part(seed: &Seed, f: &Laurent) -> Result<(Vec<i64>, Laurent)> {
    let r = seed.rank;
    let mut lead: Option<Vec<i64>> = None;
    let mut terms = Vec::new();
    for (e, c) in f.terms() {
        let n = &e[r..];
        let lift = Ring::Prin.lift(seed, n);
        let m0: Vec<i64> = (0..r).map(|i| e[i] - lift[i]).collect();
        match &lead {
            None => lead = Some(m0),
            Some(l) if *l != m0 => {
                return Err(Error::Input(format!("{f} is not of the form z^m · P(x)")))
            }
            _ => {}
        }
        terms.push((n.to_vec(), c.clone()));
    }
    let m0 = lead.unwrap_or_else(|| vec![0; r]);
    Ok((m0, Laurent::from_terms(r, terms)))
}

fn check_exponent(seed: &Seed, k: usize, e: &[i64]) -> Result<()> {
    if k >= seed.rank {
        return Err(Error::IndexOutOfRange {
            index: k,
            rank: seed.rank,
        });
    }
    if e.len() != 2 * seed.rank {
        return Err(Error::DimensionMismatch {
            expected: 2 * seed.rank,
            got: e.len(),
        });
    }
    Ok(())
}

/// `Σ^* ∘ 𝔭^*_{C⁻, μ_k C⁻}` on `z^e`: the crossing of `e_k^⊥` from `μ_k C⁻`
/// into `C⁻`, followed by inversion.
pub fn sigma_conjugated_crossing(seed: &Seed, k: usize, e: &[i64]) -> Result<RationalExpr> {
    check_exponent(seed, k, e)?;
    let into_minus = vertex_crossings(seed, Side::Minus, &[k])?[0].inverse();
    let pb = crossing_pullback(seed, &into_minus)?;
    let moved = RationalExpr::from_laurent(Laurent::var_power(e)).substitute(&pb)?;
    let nv = 2 * seed.rank;
    let inv: Vec<RationalExpr> = (0..nv)
        .map(|i| RationalExpr::var(nv, i).recip())
        .collect::<Result<_>>()?;
    moved.substitute(&inv)
}

/// `μ_k^* ∘ Σ^*` on `z^{e + c·({e_k,·}, e_k)}` with `c = <d_k e_k, m>`, using the
/// mutation `z^{(m,n)} ↦ z^{(m,n)} (1 + z^{({e_k,·}, e_k)})^{-<d_k e_k, m>}`.
pub fn mutation_route(seed: &Seed, k: usize, e: &[i64]) -> Result<RationalExpr> {
    check_exponent(seed, k, e)?;
    let r = seed.rank;
    let xk = Ring::Prin.lift(seed, &seed.basis_vector(k));
    let c = e[k];
    let flipped: Vec<i64> = e.iter().zip(&xk).map(|(a, b)| -(a + c * b)).collect();
    let base = RationalExpr::from_laurent(Laurent::var_power(&xk))
        .add(&RationalExpr::constant(2 * r, 1))?;
    RationalExpr::from_laurent(Laurent::var_power(&flipped)).mul(&base.pow(-flipped[k])?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Seed {
        Seed::skew_symmetric(vec![vec![0, 1], vec![-1, 0]]).unwrap()
    }

    #[test]
    fn rejects_non_maximal_sequences() {
        assert!(matches!(
            DtTransform::new(&a2(), &[0]),
            Err(Error::NotMaximalGreen)
        ));
        assert!(matches!(
            DtTransform::new(&a2(), &[]),
            Err(Error::NotMaximalGreen)
        ));
        assert!(matches!(
            DtTransform::new(&a2(), &[0, 0]),
            Err(Error::NotGreen { step: 1, index: 0 })
        ));
    }

    #[test]
    fn a2_dt_on_generators() {
        let s = a2();
        let dt = DtTransform::new(&s, &[0, 1]).unwrap();
        let f1 = dt.apply(&prin_m(&[1, 0])).unwrap();
        let (m0, p) = split_x_part(&s, &f1).unwrap();
        assert_eq!(m0, vec![-1, 0]);
        // F-polynomial 1 + y1 of the first mutated variable
        assert_eq!(
            p,
            Laurent::from_terms(2, [(vec![0, 0], 1.into()), (vec![1, 0], 1.into())])
        );
        assert_eq!(dt.apply(&prin_n(&[0, 1])).unwrap(), prin_n(&[0, -1]));
    }

    #[test]
    fn inverse_round_trip() {
        let s = a2();
        for seq in [vec![0, 1], vec![1, 0, 1]] {
            let dt = DtTransform::new(&s, &seq).unwrap();
            for i in 0..2 {
                let z = prin_m(&s.basis_vector(i));
                let there = dt.apply(&z).unwrap();
                let back = dt.apply_inverse(&there).unwrap();
                assert_eq!(back, z);
            }
        }
    }

    #[test]
    fn both_a2_sequences_agree() {
        let s = a2();
        let a = DtTransform::new(&s, &[0, 1]).unwrap();
        let b = DtTransform::new(&s, &[1, 0, 1]).unwrap();
        for i in 0..2 {
            let z = prin_m(&s.basis_vector(i));
            assert_eq!(a.apply(&z).unwrap(), b.apply(&z).unwrap());
        }
    }
}
