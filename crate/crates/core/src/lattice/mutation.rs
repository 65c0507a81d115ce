use super::cone::Cone;
use super::seed::Seed;
use crate::error::{Error, Result};
use crate::linalg::qvec;

/// Which half of the cluster complex a chamber belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn sign(self) -> i64 {
        match self {
            Side::Plus => 1,
            Side::Minus => -1,
        }
    }

    pub fn flip(self) -> Side {
        match self {
            Side::Plus => Side::Minus,
            Side::Minus => Side::Plus,
        }
    }
}

fn pos(x: i64) -> i64 {
    x.max(0)
}

/// Mutated skew form together with c-vectors (in `N`, basis `e`) and
/// g-vectors (in `M°`, basis `f`) relative to the initial seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    pub current: Seed,
    pub c: Vec<Vec<i64>>,
    pub g: Vec<Vec<i64>>,
}

impl Frame {
    fn initial(seed: &Seed) -> Frame {
        let r = seed.rank;
        Frame {
            current: seed.clone(),
            c: (0..r).map(|i| seed.basis_vector(i)).collect(),
            g: (0..r).map(|i| seed.basis_vector(i)).collect(),
        }
    }

    /// Sign of the (sign-coherent) c-vector `c_k`, ignoring frozen coordinates.
    pub fn c_sign(&self, k: usize) -> i64 {
        let s = &self.current;
        for (i, &x) in self.c[k].iter().enumerate() {
            if x != 0 && !s.is_frozen(i) {
                return x.signum();
            }
        }
        1
    }

    fn mutate(&self, k: usize) -> Frame {
        let s = &self.current;
        let r = s.rank;
        let sigma = self.c_sign(k);
        let eps = s.exchange_matrix();

        // new basis e'_i = e_i + [ε_ik]_+ e_k, e'_k = -e_k
        let basis: Vec<Vec<i64>> = (0..r)
            .map(|i| {
                let mut v = s.basis_vector(i);
                if i == k {
                    v[k] = -1;
                } else {
                    v[k] += pos(eps[i][k]);
                }
                v
            })
            .collect();
        let mut skew = vec![vec![0; r]; r];
        for i in 0..r {
            for j in 0..r {
                skew[i][j] = s.skew_pair_unchecked(&basis[i], &basis[j]);
            }
        }
        let current = Seed { skew, ..s.clone() };

        let mut c = self.c.clone();
        for i in 0..r {
            if i == k {
                c[i] = self.c[k].iter().map(|x| -x).collect();
            } else {
                let t = pos(sigma * eps[i][k]);
                c[i] = self.c[i]
                    .iter()
                    .zip(&self.c[k])
                    .map(|(a, b)| a + t * b)
                    .collect();
            }
        }

        let mut g = self.g.clone();
        let mut gk: Vec<i64> = self.g[k].iter().map(|x| -x).collect();
        for i in 0..r {
            let t = pos(-sigma * eps[k][i]);
            if t != 0 {
                for (a, b) in gk.iter_mut().zip(&self.g[i]) {
                    *a += t * b;
                }
            }
        }
        g[k] = gk;
        Frame { current, c, g }
    }
}

/// A seed reached from the initial seed by a sequence of mutations.
///
/// Tracks the frame of the initial seed (chambers of the positive part)
/// and the frame of the opposite seed (chambers of the negative part).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalSeed {
    pub initial: Seed,
    pub plus: Frame,
    pub minus: Frame,
    pub path: Vec<usize>,
}

impl PrincipalSeed {
    pub fn new(seed: &Seed) -> Self {
        PrincipalSeed {
            initial: seed.clone(),
            plus: Frame::initial(seed),
            minus: Frame::initial(&seed.opposite()),
            path: vec![],
        }
    }

    pub fn rank(&self) -> usize {
        self.initial.rank
    }

    pub fn mutate(&self, k: usize) -> Result<PrincipalSeed> {
        if k >= self.rank() {
            return Err(Error::IndexOutOfRange {
                index: k,
                rank: self.rank(),
            });
        }
        if self.initial.is_frozen(k) {
            return Err(Error::Frozen(k));
        }
        let mut path = self.path.clone();
        path.push(k);
        Ok(PrincipalSeed {
            initial: self.initial.clone(),
            plus: self.plus.mutate(k),
            minus: self.minus.mutate(k),
            path,
        })
    }

    pub fn mutate_seq(&self, seq: &[usize]) -> Result<PrincipalSeed> {
        let mut s = self.clone();
        for &k in seq {
            s = s.mutate(k)?;
        }
        Ok(s)
    }

    pub fn frame(&self, side: Side) -> &Frame {
        match side {
            Side::Plus => &self.plus,
            Side::Minus => &self.minus,
        }
    }

    /// Current skew form (mutated from the initial one).
    pub fn current(&self) -> &Seed {
        &self.plus.current
    }

    pub fn c_vectors(&self) -> &[Vec<i64>] {
        &self.plus.c
    }

    pub fn g_vectors(&self) -> &[Vec<i64>] {
        &self.plus.g
    }

    /// Rays of the chamber on the given side, in the `f` basis.
    pub fn chamber_rays(&self, side: Side) -> Vec<Vec<i64>> {
        let f = self.frame(side);
        f.g.iter()
            .map(|g| g.iter().map(|x| side.sign() * x).collect())
            .collect()
    }

    /// The chamber `C^±_v` as a cone in `M_R`.
    pub fn chamber(&self, side: Side) -> Cone {
        Cone::new(
            self.chamber_rays(side).iter().map(|r| qvec(r)).collect(),
            vec![],
        )
    }

    /// `C^±_v × N_R` in `M°_R ⊕ N_R`.
    pub fn chamber_cone(&self, side: Side) -> Cone {
        let r = self.rank();
        let rays = self.chamber_rays(side).into_iter().map(|g| {
            let mut v = g;
            v.extend(std::iter::repeat_n(0, r));
            qvec(&v)
        });
        let lines = (0..r).map(|i| {
            let mut v = vec![0; 2 * r];
            v[r + i] = 1;
            qvec(&v)
        });
        Cone::new(rays.collect(), lines.collect())
    }

    /// Primitive positive normal (in `N^+`) of the facet of the chamber
    /// opposite to ray `k`, i.e. the wall crossed by mutation at `k`.
    pub fn facet_normal(&self, side: Side, k: usize) -> Vec<i64> {
        let f = self.frame(side);
        let s = f.c_sign(k);
        f.c[k].iter().map(|x| s * x).collect()
    }

    /// Sorted chamber rays, usable as a key identifying the chamber.
    pub fn chamber_key(&self, side: Side) -> Vec<Vec<i64>> {
        let mut rays = self.chamber_rays(side);
        rays.sort();
        rays
    }

    /// True if `c_k` is nonnegative (green) in the positive frame.
    pub fn is_green(&self, k: usize) -> bool {
        self.plus.c_sign(k) > 0
    }

    pub fn all_red(&self) -> bool {
        self.initial.unfrozen().all(|k| !self.is_green(k))
    }
}

/// Applies the sequence, failing with [`Error::NotGreen`] at the first red mutation.
pub fn follow_green_sequence(seed: &Seed, seq: &[usize]) -> Result<Vec<PrincipalSeed>> {
    let mut s = PrincipalSeed::new(seed);
    let mut out = vec![s.clone()];
    for (step, &k) in seq.iter().enumerate() {
        if k >= seed.rank {
            return Err(Error::IndexOutOfRange {
                index: k,
                rank: seed.rank,
            });
        }
        if !s.is_green(k) {
            return Err(Error::NotGreen { step, index: k });
        }
        s = s.mutate(k)?;
        out.push(s.clone());
    }
    Ok(out)
}

pub fn is_green_sequence(seed: &Seed, seq: &[usize]) -> bool {
    follow_green_sequence(seed, seq).is_ok()
}

pub fn is_maximal_green_sequence(seed: &Seed, seq: &[usize]) -> bool {
    matches!(follow_green_sequence(seed, seq), Ok(v) if v.last().is_some_and(|s| s.all_red()))
}
