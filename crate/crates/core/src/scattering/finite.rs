use std::collections::{BTreeSet, HashMap, VecDeque};

use super::diagram::Diagram;
use super::wall::Wall;
use crate::error::{Error, Result};
use crate::lattice::{Cone, PrincipalSeed, Seed, Side};
use crate::linalg::qvec;
use crate::poly::Series1;

/// Chambers reached from the initial one by mutation, with the facet walls between them.
#[derive(Clone, Debug)]
pub struct ChamberFan {
    pub seeds: Vec<PrincipalSeed>,
    /// `(chamber, direction) -> neighbouring chamber`.
    pub adjacency: HashMap<(usize, usize), usize>,
    pub depth: Vec<usize>,
}

/// Breadth-first exploration of the mutation graph, identifying vertices
/// with equal chambers on `side`. Fails if new chambers keep appearing at `max_depth`.
pub fn explore_chambers(seed: &Seed, side: Side, max_depth: usize) -> Result<ChamberFan> {
    let root = PrincipalSeed::new(seed);
    let mut index: HashMap<Vec<Vec<i64>>, usize> = HashMap::new();
    index.insert(root.chamber_key(side), 0);
    let mut fan = ChamberFan {
        seeds: vec![root],
        adjacency: HashMap::new(),
        depth: vec![0],
    };
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for k in seed.unfrozen() {
            let w = fan.seeds[v].mutate(k)?;
            let key = w.chamber_key(side);
            let target = match index.get(&key) {
                Some(&t) => t,
                None => {
                    if fan.depth[v] + 1 > max_depth {
                        return Err(Error::NotFiniteType { depth: max_depth });
                    }
                    let t = fan.seeds.len();
                    index.insert(key, t);
                    fan.seeds.push(w);
                    fan.depth.push(fan.depth[v] + 1);
                    queue.push_back(t);
                    t
                }
            };
            fan.adjacency.insert((v, k), target);
        }
    }
    Ok(fan)
}

/// Facet of the chamber of `ps` opposite to ray `k`, as a wall with function `(1 + t)^{d_k}`.
pub fn facet_wall(ps: &PrincipalSeed, side: Side, k: usize) -> Result<Wall> {
    let rays = ps.chamber_rays(side);
    let support = Cone::with_dim(
        ps.rank(),
        rays.iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, r)| qvec(r))
            .collect(),
        vec![],
    );
    Wall::new(
        &ps.initial,
        ps.facet_normal(side, k),
        support,
        Series1::binomial(ps.initial.d[k] as u32),
    )
}

/// Scattering diagram of a finite-type seed: the facets of the cluster fan,
/// each carrying `(1 + z^{c})^{d_k}` for its normal c-vector `c`.
pub fn finite_type_diagram(seed: &Seed, order: u32, max_depth: usize) -> Result<Diagram> {
    let fan = explore_chambers(seed, Side::Plus, max_depth)?;
    let mut seen: BTreeSet<(Vec<i64>, Vec<Vec<i64>>)> = BTreeSet::new();
    let mut d = Diagram::new(seed.clone(), order);
    for ps in &fan.seeds {
        for k in seed.unfrozen() {
            let w = facet_wall(ps, Side::Plus, k)?;
            let key = (w.normal.clone(), w.support.int_rays());
            if seen.insert(key) {
                d.push(w)?;
            }
        }
    }
    Ok(d)
}

/// Facet walls of the chambers of `side` reached by at most `depth` mutations.
///
/// For finite type and large `depth` this is [`finite_type_diagram`]; otherwise
/// it is the part of the cluster complex near the initial chamber.
pub fn fan_walls(seed: &Seed, side: Side, depth: usize, order: u32) -> Result<Diagram> {
    let root = PrincipalSeed::new(seed);
    let mut seen_chambers = BTreeSet::from([root.chamber_key(side)]);
    let mut frontier = vec![root];
    let mut seen: BTreeSet<(Vec<i64>, Vec<Vec<i64>>)> = BTreeSet::new();
    let mut d = Diagram::new(seed.clone(), order);
    for level in 0..=depth {
        let mut next = Vec::new();
        for ps in &frontier {
            for k in seed.unfrozen() {
                let w = facet_wall(ps, side, k)?;
                if seen.insert((w.normal.clone(), w.support.int_rays())) {
                    d.push(w)?;
                }
                if level < depth {
                    let v = ps.mutate(k)?;
                    if seen_chambers.insert(v.chamber_key(side)) {
                        next.push(v);
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Seed {
        Seed::skew_symmetric(vec![vec![0, 1], vec![-1, 0]]).unwrap()
    }

    fn a3() -> Seed {
        Seed::skew_symmetric(vec![vec![0, 1, 0], vec![-1, 0, -1], vec![0, 1, 0]]).unwrap()
    }

    #[test]
    fn bounded_fan_matches_finite_diagram() {
        let full = finite_type_diagram(&a3(), 4, 12).unwrap();
        let bounded = fan_walls(&a3(), Side::Plus, 12, 4).unwrap();
        assert_eq!(bounded.to_json(), full.to_json());
        let markov = Seed::new(
            vec![vec![0, 1, -1], vec![-1, 0, 1], vec![1, -1, 0]],
            vec![2, 2, 2],
        )
        .unwrap();
        assert_eq!(fan_walls(&markov, Side::Plus, 0, 4).unwrap().walls.len(), 3);
        assert!(fan_walls(&markov, Side::Minus, 2, 4).unwrap().walls.len() > 9);
    }

    #[test]
    fn a2_has_five_chambers_and_walls() {
        let fan = explore_chambers(&a2(), Side::Plus, 10).unwrap();
        assert_eq!(fan.seeds.len(), 5);
        let d = finite_type_diagram(&a2(), 6, 10).unwrap();
        assert_eq!(d.walls.len(), 5);
    }

    #[test]
    fn a3_has_fourteen_chambers() {
        assert_eq!(
            explore_chambers(&a3(), Side::Plus, 12).unwrap().seeds.len(),
            14
        );
        assert_eq!(finite_type_diagram(&a3(), 4, 12).unwrap().walls.len(), 21);
    }

    #[test]
    fn b2_has_six_chambers() {
        let b2 = Seed::new(vec![vec![0, 1], vec![-1, 0]], vec![2, 1]).unwrap();
        assert_eq!(
            explore_chambers(&b2, Side::Plus, 10).unwrap().seeds.len(),
            6
        );
    }

    #[test]
    fn markov_is_not_finite() {
        let m = Seed::new(
            vec![vec![0, 1, -1], vec![-1, 0, 1], vec![1, -1, 0]],
            vec![2, 2, 2],
        )
        .unwrap();
        assert!(matches!(
            finite_type_diagram(&m, 4, 6),
            Err(Error::NotFiniteType { depth: 6 })
        ));
    }

    #[test]
    fn negative_fan_agrees_in_finite_type() {
        for s in [a2(), a3()] {
            let mut plus: Vec<_> = explore_chambers(&s, Side::Plus, 12)
                .unwrap()
                .seeds
                .iter()
                .map(|p| p.chamber_key(Side::Plus))
                .collect();
            let mut minus: Vec<_> = explore_chambers(&s, Side::Minus, 12)
                .unwrap()
                .seeds
                .iter()
                .map(|p| p.chamber_key(Side::Minus))
                .collect();
            plus.sort();
            minus.sort();
            assert_eq!(plus, minus);
        }
    }
}
