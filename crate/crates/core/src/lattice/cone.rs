use std::fmt;

use crate::linalg::{self, dot, nullspace, rank, rref, QVec, Q};

/// Polyhedral cone `cone(rays) + span(lines)` in `M_R`.
///
/// Rays are stored primitive-integral and orthogonal to the lineality
/// space; lines are stored as a reduced row echelon basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cone {
    dim: usize,
    rays: Vec<QVec>,
    lines: Vec<QVec>,
}

/// Scales to a primitive integral vector.
fn primitive(v: &[Q]) -> QVec {
    linalg::primitive(v)
        .into_iter()
        .map(Q::from_integer)
        .collect()
}

fn project_off(v: &[Q], basis: &[QVec]) -> QVec {
    if basis.is_empty() {
        return v.to_vec();
    }
    // orthogonal projection onto basis^⊥ via Gram system
    let k = basis.len();
    let gram: Vec<QVec> = (0..k)
        .map(|i| (0..k).map(|j| dot(&basis[i], &basis[j])).collect())
        .collect();
    let rhs: QVec = basis.iter().map(|b| dot(b, v)).collect();
    let inv = linalg::inverse(&gram).expect("lineality basis independent");
    let coef = linalg::mat_vec(&inv, &rhs);
    let mut out = v.to_vec();
    for (c, b) in coef.iter().zip(basis) {
        for (o, x) in out.iter_mut().zip(b) {
            *o -= c * x;
        }
    }
    out
}

/// Iterates over all `k`-subsets of `0..n`.
pub(crate) fn combinations(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Extreme rays and lineality space of `{x : a·x ≥ 0 (a ∈ ineqs), b·x = 0 (b ∈ eqs)}`.
pub fn extreme_rays(ineqs: &[QVec], eqs: &[QVec], dim: usize) -> (Vec<QVec>, Vec<QVec>) {
    let mut all: Vec<QVec> = ineqs.to_vec();
    all.extend(eqs.iter().cloned());
    let lines = nullspace(&all, dim);
    let mut fixed: Vec<QVec> = eqs.to_vec();
    fixed.extend(lines.iter().cloned());
    let r_fixed = rank(&fixed);
    if r_fixed >= dim {
        return (vec![], lines);
    }
    let k = dim - r_fixed;
    let mut rays: Vec<QVec> = Vec::new();
    combinations(ineqs.len(), k - 1, |sub| {
        let mut sys = fixed.clone();
        sys.extend(sub.iter().map(|&i| ineqs[i].clone()));
        if rank(&sys) != dim - 1 {
            return;
        }
        let ns = nullspace(&sys, dim);
        let v = &ns[0];
        let signs: Vec<i32> = ineqs.iter().map(|a| linalg::sign(&dot(a, v))).collect();
        let cand = if signs.iter().all(|&s| s >= 0) {
            Some(v.clone())
        } else if signs.iter().all(|&s| s <= 0) {
            Some(linalg::neg(v))
        } else {
            None
        };
        if let Some(c) = cand {
            let c = primitive(&c);
            if !rays.contains(&c) {
                rays.push(c);
            }
        }
    });
    rays.sort();
    (rays, lines)
}

impl Cone {
    pub fn new(rays: Vec<QVec>, lines: Vec<QVec>) -> Cone {
        let dim = rays.first().or(lines.first()).map(|v| v.len()).unwrap_or(0);
        Self::with_dim(dim, rays, lines)
    }

    pub fn with_dim(dim: usize, rays: Vec<QVec>, lines: Vec<QVec>) -> Cone {
        let mut l = lines;
        let pivots = rref(&mut l);
        l.truncate(pivots.len());
        let mut rs: Vec<QVec> = Vec::new();
        for r in rays {
            let p = project_off(&r, &l);
            if linalg::is_zero(&p) {
                continue;
            }
            let p = primitive(&p);
            if !rs.contains(&p) {
                rs.push(p);
            }
        }
        rs.sort();
        Cone {
            dim,
            rays: rs,
            lines: l,
        }
    }

    pub fn from_int_rays(rays: &[Vec<i64>]) -> Cone {
        Cone::new(rays.iter().map(|r| linalg::qvec(r)).collect(), vec![])
    }

    pub fn whole_space(dim: usize) -> Cone {
        let lines = (0..dim)
            .map(|i| (0..dim).map(|j| linalg::q(i64::from(i == j))).collect())
            .collect();
        Cone::with_dim(dim, vec![], lines)
    }

    /// The hyperplane `normal^⊥`.
    pub fn hyperplane(normal: &[Q]) -> Cone {
        let dim = normal.len();
        Cone::with_dim(dim, vec![], nullspace(&[normal.to_vec()], dim))
    }

    pub fn from_hrep(ineqs: &[QVec], eqs: &[QVec], dim: usize) -> Cone {
        let (rays, lines) = extreme_rays(ineqs, eqs, dim);
        Cone::with_dim(dim, rays, lines)
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[QVec] {
        &self.rays
    }

    pub fn lines(&self) -> &[QVec] {
        &self.lines
    }

    /// Rays as integer vectors.
    pub fn int_rays(&self) -> Vec<Vec<i64>> {
        self.rays
            .iter()
            .map(|r| linalg::to_i64(r).expect("primitive rays are integral"))
            .collect()
    }

    pub fn generators(&self) -> Vec<QVec> {
        let mut g = self.rays.clone();
        g.extend(self.lines.iter().cloned());
        g
    }

    /// Dimension of the linear span.
    pub fn dimension(&self) -> usize {
        rank(&self.generators())
    }

    pub fn is_simplicial(&self) -> bool {
        self.dimension() == self.rays.len() + self.lines.len()
    }

    /// Normals of the linear span (a basis of its orthogonal complement).
    pub fn span_normals(&self) -> Vec<QVec> {
        nullspace(&self.generators(), self.dim)
    }

    /// Facet inequalities and equations: `(ineqs, eqs)` with the cone equal to
    /// `{a·x ≥ 0, b·x = 0}`. Inequalities are irredundant.
    pub fn hrep(&self) -> (Vec<QVec>, Vec<QVec>) {
        let gens_eq: Vec<QVec> = self.lines.clone();
        let (ineqs, eqs) = extreme_rays(&self.rays, &gens_eq, self.dim);
        (ineqs, eqs)
    }

    pub fn contains(&self, x: &[Q]) -> bool {
        if self.is_simplicial() {
            let gens = self.generators();
            return match linalg::solve_in_span(&gens, x) {
                Some(c) => c[..self.rays.len()].iter().all(|v| linalg::sign(v) >= 0),
                None => false,
            };
        }
        let (ineqs, eqs) = self.hrep();
        eqs.iter().all(|b| linalg::sign(&dot(b, x)) == 0)
            && ineqs.iter().all(|a| linalg::sign(&dot(a, x)) >= 0)
    }

    /// Membership in the relative interior.
    pub fn contains_relint(&self, x: &[Q]) -> bool {
        if self.is_simplicial() {
            let gens = self.generators();
            return match linalg::solve_in_span(&gens, x) {
                Some(c) => c[..self.rays.len()].iter().all(|v| linalg::sign(v) > 0),
                None => false,
            };
        }
        let (ineqs, eqs) = self.hrep();
        eqs.iter().all(|b| linalg::sign(&dot(b, x)) == 0)
            && ineqs.iter().all(|a| linalg::sign(&dot(a, x)) > 0)
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.rays.iter().all(|r| self.contains(r))
            && other
                .lines
                .iter()
                .all(|l| self.contains(l) && self.contains(&linalg::neg(l)))
    }

    pub fn intersect(&self, other: &Cone) -> Cone {
        let (mut a, mut b) = self.hrep();
        let (a2, b2) = other.hrep();
        a.extend(a2);
        b.extend(b2);
        Cone::from_hrep(&a, &b, self.dim)
    }

    /// Canonical form with only extreme rays.
    pub fn canonical(&self) -> Cone {
        let (a, b) = self.hrep();
        Cone::from_hrep(&a, &b, self.dim)
    }

    pub fn same_set(&self, other: &Cone) -> bool {
        self.contains_cone(other) && other.contains_cone(self)
    }

    /// A point in the relative interior: a positive combination of all
    /// generators with pairwise distinct weights.
    pub fn relint_point(&self) -> QVec {
        let mut p = vec![linalg::q(0); self.dim];
        for (i, r) in self.rays.iter().enumerate() {
            let w = linalg::qfrac(
                PRIMES[i % PRIMES.len()] + 100 * (i / PRIMES.len()) as i64,
                7,
            );
            p = linalg::add(&p, &linalg::scale(&w, r));
        }
        for (i, l) in self.lines.iter().enumerate() {
            let w = linalg::qfrac(PRIMES[(i + 5) % PRIMES.len()], 11);
            p = linalg::add(&p, &linalg::scale(&w, l));
        }
        p
    }

    /// Faces of codimension one (for a simplicial cone, drop one ray).
    pub fn facets(&self) -> Vec<Cone> {
        let (ineqs, eqs) = self.hrep();
        ineqs
            .iter()
            .map(|a| {
                let mut e = eqs.clone();
                e.push(a.clone());
                let others: Vec<QVec> = ineqs.iter().filter(|b| *b != a).cloned().collect();
                Cone::from_hrep(&others, &e, self.dim)
            })
            .collect()
    }
}

pub(crate) const PRIMES: [i64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

impl fmt::Debug for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &QVec| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "cone[")?;
        for (i, r) in self.rays.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "({})", show(r))?;
        }
        if !self.lines.is_empty() {
            write!(f, " | lines:")?;
            for l in &self.lines {
                write!(f, " ({})", show(l))?;
            }
        }
        write!(f, "]")
    }
}

/// Lattice points of a rational cone, described by primitive integral
/// extreme rays and a basis of its lineality space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeCone {
    pub rays: Vec<Vec<i64>>,
    pub lines: Vec<Vec<i64>>,
}

impl LatticeCone {
    /// True if the cone is exactly `0 ⊕ R^{dim - m}`, the span of the last coordinates after the first `m`.
    pub fn is_trailing_subspace(&self, m: usize) -> bool {
        let dim = self.lines.first().map(|l| l.len()).unwrap_or(m);
        self.rays.is_empty()
            && self.lines.len() == dim - m
            && self.lines.iter().all(|l| l[..m].iter().all(|&x| x == 0))
    }
}

/// Intersection of two chambers as a lattice cone.
pub fn chamber_lattice_intersection(a: &Cone, b: &Cone) -> LatticeCone {
    let c = a.intersect(b);
    LatticeCone {
        rays: c.int_rays(),
        lines: c.lines().iter().map(|l| linalg::primitive_i64(l)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qvec;

    #[test]
    fn combinations_enumerates_all() {
        let mut seen = vec![];
        combinations(4, 2, |s| seen.push(s.to_vec()));
        assert_eq!(seen.len(), 6);
        let mut n = 0;
        combinations(3, 0, |_| n += 1);
        assert_eq!(n, 1);
        let mut m = 0;
        combinations(5, 5, |_| m += 1);
        assert_eq!(m, 1);
    }

    #[test]
    fn orthant_intersections() {
        let a = Cone::from_int_rays(&[vec![1, 0], vec![0, 1]]);
        let b = Cone::from_int_rays(&[vec![1, 1], vec![-1, 1]]);
        let c = a.intersect(&b);
        assert_eq!(c.int_rays(), vec![vec![0, 1], vec![1, 1]]);
        let d = Cone::from_int_rays(&[vec![-1, 0], vec![0, -1]]);
        assert!(a.intersect(&d).rays().is_empty());
        let lc = chamber_lattice_intersection(&a, &b);
        assert_eq!(lc.rays, vec![vec![0, 1], vec![1, 1]]);
        assert!(lc.lines.is_empty());
    }

    #[test]
    fn hyperplane_membership() {
        let h = Cone::hyperplane(&qvec(&[1, 1, 0]));
        assert!(h.contains(&qvec(&[1, -1, 5])));
        assert!(!h.contains(&qvec(&[1, 0, 0])));
        assert_eq!(h.dimension(), 2);
        let half = Cone::new(vec![qvec(&[1, 0, 0])], vec![qvec(&[0, 0, 1])]);
        assert!(half.contains(&qvec(&[3, 0, -2])));
        assert!(!half.contains(&qvec(&[-1, 0, 0])));
        assert!(half.contains_relint(&qvec(&[1, 0, 0])));
        assert!(!half.contains_relint(&qvec(&[0, 0, 1])));
    }

    #[test]
    fn non_simplicial_cone() {
        let sq =
            Cone::from_int_rays(&[vec![1, 0, 1], vec![0, 1, 1], vec![-1, 0, 1], vec![0, -1, 1]]);
        assert!(!sq.is_simplicial());
        assert_eq!(sq.hrep().0.len(), 4);
        assert!(sq.contains(&qvec(&[0, 0, 1])));
        assert!(!sq.contains(&qvec(&[1, 1, 1])));
        assert_eq!(sq.facets().len(), 4);
    }

    #[test]
    fn relint_point_inside() {
        let c = Cone::from_int_rays(&[vec![1, 0, 0], vec![1, 1, 0], vec![1, 1, 1]]);
        assert!(c.contains_relint(&c.relint_point()));
    }
}
