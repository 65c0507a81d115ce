use std::collections::BTreeSet;

use super::diagram::{Diagram, PointFunction};
use super::wall::Wall;
use crate::error::Result;
use crate::lattice::Cone;
use crate::linalg::{self, rank, QVec, Q};

/// Full-dimensional cells of the hyperplane `normal^⊥` cut out by every facet
/// hyperplane of the walls lying in it and by every other wall hyperplane.
///
/// On the interior of a cell, `g_x` is constant for each of the given diagrams.
pub fn hyperplane_cells(diagrams: &[&Diagram], normal: &[i64]) -> Vec<Cone> {
    let seed = &diagrams[0].seed;
    let dim = seed.rank;
    let nv = seed.normal(normal);
    let mut cuts: Vec<QVec> = Vec::new();
    let push_cut = |h: QVec, cuts: &mut Vec<QVec>| {
        if rank(&[nv.clone(), h.clone()]) < 2 {
            return;
        }
        let p: QVec = linalg::primitive(&h)
            .into_iter()
            .map(Q::from_integer)
            .collect();
        let m = linalg::neg(&p);
        if !cuts.contains(&p) && !cuts.contains(&m) {
            cuts.push(p);
        }
    };
    for d in diagrams {
        for w in d.nontrivial_walls() {
            if w.normal == normal {
                for a in w.support.hrep().0 {
                    push_cut(a, &mut cuts);
                }
            } else {
                push_cut(seed.normal(&w.normal), &mut cuts);
            }
        }
    }
    let mut cells: Vec<(Vec<QVec>, Vec<QVec>)> = vec![(vec![], vec![nv.clone()])];
    for h in &cuts {
        let mut next = Vec::new();
        for (ineqs, eqs) in cells {
            for s in [1i64, -1] {
                let mut a = ineqs.clone();
                a.push(linalg::scale(&Q::from_integer(s.into()), h));
                if Cone::from_hrep(&a, &eqs, dim).dimension() + 1 == dim {
                    next.push((a, eqs.clone()));
                }
            }
        }
        cells = next;
    }
    cells
        .into_iter()
        .map(|(a, e)| Cone::from_hrep(&a, &e, dim))
        .collect()
}

fn all_normals(diagrams: &[&Diagram]) -> Vec<Vec<i64>> {
    let set: BTreeSet<Vec<i64>> = diagrams.iter().flat_map(|d| d.normals()).collect();
    set.into_iter().collect()
}

fn func_at(d: &Diagram, x: &[Q]) -> Result<Option<PointFunction>> {
    d.g_x(x)
}

/// First general point where `g_x` differs, if any.
pub fn equivalence_witness(d1: &Diagram, d2: &Diagram) -> Result<Option<QVec>> {
    let order = d1.order.min(d2.order) as i64;
    let trunc = |p: Option<PointFunction>| {
        p.map(|pf| {
            let max = (order / pf.normal.iter().sum::<i64>()) as usize;
            PointFunction {
                func: pf.func.truncate(max),
                ..pf
            }
        })
        .filter(|pf| !pf.func.is_one())
    };
    for n in all_normals(&[d1, d2]) {
        for cell in hyperplane_cells(&[d1, d2], &n) {
            let x = cell.relint_point();
            if trunc(func_at(d1, &x)?) != trunc(func_at(d2, &x)?) {
                return Ok(Some(x));
            }
        }
    }
    Ok(None)
}

/// Equivalence: equal `g_x` at every general point, up to the smaller order.
pub fn equivalent(d1: &Diagram, d2: &Diagram) -> Result<bool> {
    Ok(equivalence_witness(d1, d2)?.is_none())
}

/// True if the union of two cones sharing a facet inside one hyperplane is convex.
fn union_is_convex(a: &Cone, b: &Cone) -> Option<Cone> {
    let meet = a.intersect(b);
    if meet.dimension() + 1 != a.dimension() {
        return None;
    }
    let mut gens = a.rays().to_vec();
    gens.extend(b.rays().iter().cloned());
    let mut lines = a.lines().to_vec();
    lines.extend(b.lines().iter().cloned());
    let hull = Cone::with_dim(a.ambient_dim(), gens, lines).canonical();
    let (ineqs, _) = a.hrep();
    let sep = ineqs.into_iter().find(|h| {
        meet.generators()
            .iter()
            .all(|g| linalg::sign(&linalg::dot(h, g)) == 0)
    })?;
    let (hi, he) = hull.hrep();
    let dim = a.ambient_dim();
    let side = |s: i64| {
        let mut i = hi.clone();
        i.push(linalg::scale(&Q::from_integer(s.into()), &sep));
        Cone::from_hrep(&i, &he, dim)
    };
    if side(1).same_set(a) && side(-1).same_set(b) {
        Some(hull)
    } else {
        None
    }
}

/// Merges walls with equal normal and function whose supports glue to a convex cone.
pub fn merge_walls(walls: Vec<Wall>) -> Vec<Wall> {
    let mut ws = walls;
    loop {
        let mut merged = false;
        'outer: for i in 0..ws.len() {
            for j in i + 1..ws.len() {
                if ws[i].normal != ws[j].normal || ws[i].func != ws[j].func {
                    continue;
                }
                if let Some(hull) = union_is_convex(&ws[i].support, &ws[j].support) {
                    let w = Wall {
                        support: hull,
                        ..ws[i].clone()
                    };
                    ws.remove(j);
                    ws[i] = w;
                    merged = true;
                    break 'outer;
                }
            }
        }
        if !merged {
            return ws;
        }
    }
}

/// Canonical representative of the equivalence class: one wall per cell of
/// the common refinement carrying `g_x`, then maximal convex merges, sorted.
pub fn canonicalize(d: &Diagram) -> Result<Diagram> {
    let mut walls = Vec::new();
    for n in d.normals() {
        for cell in hyperplane_cells(&[d], &n) {
            if let Some(pf) = d.g_x(&cell.relint_point())? {
                walls.push(Wall {
                    normal: pf.normal,
                    support: cell,
                    func: pf.func,
                });
            }
        }
    }
    let walls = merge_walls(walls);
    Ok(Diagram {
        seed: d.seed.clone(),
        order: d.order,
        walls,
    }
    .sorted())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Seed;
    use crate::linalg::qvec;
    use crate::poly::Series1;
    use crate::scattering::{complete_rank2, finite::finite_type_diagram};

    fn a2() -> Seed {
        Seed::skew_symmetric(vec![vec![0, 1], vec![-1, 0]]).unwrap()
    }

    fn a3() -> Seed {
        Seed::skew_symmetric(vec![vec![0, 1, 0], vec![-1, 0, -1], vec![0, 1, 0]]).unwrap()
    }

    #[test]
    fn completed_equals_finite_type() {
        let c = complete_rank2(&Diagram::initial(&a2(), 8), 8).unwrap();
        let f = finite_type_diagram(&a2(), 8, 10).unwrap();
        assert!(equivalent(&c, &f).unwrap());
        assert!(!equivalent(&c, &Diagram::initial(&a2(), 8)).unwrap());
    }

    #[test]
    fn splitting_preserves_class() {
        let d = Diagram::initial(&a3(), 4);
        let s = d.split_wall(0, &qvec(&[0, 1, -1]));
        assert_eq!(s.walls.len(), 4);
        assert!(equivalent(&d, &s).unwrap());
        assert_eq!(canonicalize(&s).unwrap(), canonicalize(&d).unwrap());
    }

    #[test]
    fn a3_canonical_wall_count() {
        let d = finite_type_diagram(&a3(), 4, 12).unwrap();
        let rays: BTreeSet<Vec<i64>> = d.walls.iter().flat_map(|w| w.support.int_rays()).collect();
        assert_eq!(rays.len(), 9);
        let c = canonicalize(&d).unwrap();
        // one wall per positive root
        assert_eq!(c.walls.len(), 6);
        assert_eq!(
            c.walls
                .iter()
                .filter(|w| w.support.lines().len() == 2)
                .count(),
            3
        );
        assert!(equivalent(&d, &c).unwrap());
    }

    #[test]
    fn changed_function_detected() {
        let d = finite_type_diagram(&a2(), 6, 10).unwrap();
        let mut e = d.clone();
        e.walls[2].func = Series1::from_i64(&[1, 2]);
        assert!(equivalence_witness(&d, &e).unwrap().is_some());
    }
}
