use std::collections::{BTreeMap, VecDeque};

use num_traits::One;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::dt::{prin_m, DtTransform};
use crate::error::{Error, Result};
use crate::folding::FoldingMap;
use crate::lattice::{PrincipalSeed, Seed, Side};
use crate::linalg::{self, QVec};
use crate::poly::{Laurent, RationalExpr, Series1};
use crate::scattering::{Ring, WallCrossing};

/// Images of the coordinate monomials `z^{(f_i, 0)}`, `z^{(0, e_i)}` of the
/// principal ring under a birational automorphism.
pub type Pullback = Vec<RationalExpr>;

/// The torus chart attached to a chamber of `Δ⁺` or `Δ⁻`.
#[derive(Clone, Debug)]
pub struct Chart {
    pub id: usize,
    pub side: Side,
    pub vertex: PrincipalSeed,
    /// Sorted primitive rays of the chamber.
    pub key: Vec<Vec<i64>>,
}

impl Chart {
    pub fn interior_point(&self) -> QVec {
        let r = self.key[0].len();
        let mut p = vec![linalg::q(0); r];
        for ray in &self.key {
            p = linalg::add(&p, &linalg::qvec(ray));
        }
        p
    }
}

/// Transition between two charts, as the pullback of coordinate monomials
/// along a chain of chamber crossings.
#[derive(Clone, Debug)]
pub struct TransitionMap {
    pub source: usize,
    pub target: usize,
    /// Chart ids visited, `source` first.
    pub route: Vec<usize>,
    pub images: Pullback,
}

impl TransitionMap {
    pub fn apply(&self, f: &RationalExpr) -> Result<RationalExpr> {
        f.substitute(&self.images)
    }
}

pub fn identity_pullback(nvars: usize) -> Pullback {
    (0..nvars).map(|i| RationalExpr::var(nvars, i)).collect()
}

/// `first` then `second`: the images of `first` rewritten through `second`.
pub fn compose(first: &Pullback, second: &Pullback) -> Result<Pullback> {
    first.iter().map(|f| f.substitute(second)).collect()
}

/// Exact pullback of a crossing whose function is `(1 + t)^c`.
pub fn crossing_pullback(seed: &Seed, wc: &WallCrossing) -> Result<Pullback> {
    let r = seed.rank;
    let c = wc.func.coeffs().len() as u32 - 1;
    if wc.func != Series1::binomial(c) {
        return Err(Error::Unsupported(format!(
            "rational pullback of the non-binomial function {:?}",
            wc.func
        )));
    }
    let nv = 2 * r;
    let t = RationalExpr::from_laurent(Laurent::var_power(&Ring::Prin.lift(seed, &wc.normal)));
    let base = t.add(&RationalExpr::constant(nv, 1))?;
    let mut out = identity_pullback(nv);
    for (i, img) in out.iter_mut().enumerate().take(r) {
        // exponent sign · c · <n0, f_i>
        let num = wc.sign * c as i64 * wc.normal[i];
        if num % seed.d[i] != 0 {
            return Err(Error::Division(format!(
                "exponent {num}/{} at f_{i}",
                seed.d[i]
            )));
        }
        *img = img.mul(&base.pow(num / seed.d[i])?)?;
    }
    Ok(out)
}

/// The two pullbacks joining the charts of `C⁺` and `C⁻`.
#[derive(Clone, Debug)]
pub struct CrossEdge {
    /// `𝔭_{+,−}`.
    pub plus_minus: Pullback,
    /// `𝔭_{−,+}`.
    pub minus_plus: Pullback,
}

impl CrossEdge {
    /// Both directions from a maximal green sequence: `𝔭_{+,−}(z^{(f_i,0)})` directly and
    /// `𝔭_{−,+}(z^{(f_i,0)}) = 1 / DT(z^{(f_i,0)})`.
    pub fn from_dt(dt: &DtTransform) -> Result<CrossEdge> {
        Self::build(
            &dt.seed,
            |m| dt.apply_plus_minus(&prin_m(m)),
            |m| dt.apply(&prin_m(m)),
        )
    }

    /// Both directions for the folded seed, pushed down by `q̃` from the unfolded DT.
    pub fn folded(dt: &DtTransform, fm: &FoldingMap) -> Result<CrossEdge> {
        let reps: Vec<usize> = fm.action.orbits.iter().map(|o| o[0]).collect();
        let lift = |mbar: &[i64]| -> Vec<i64> {
            let a = mbar.iter().position(|&x| x != 0).expect("unit vector");
            dt.seed.basis_vector(reps[a])
        };
        Self::build(
            &fm.folded,
            |m| fm.q_tilde(&dt.apply_plus_minus(&prin_m(&lift(m)))?),
            |m| fm.q_tilde(&dt.apply(&prin_m(&lift(m)))?),
        )
    }

    fn build(
        seed: &Seed,
        plus_minus: impl Fn(&[i64]) -> Result<Laurent>,
        dt_image: impl Fn(&[i64]) -> Result<Laurent>,
    ) -> Result<CrossEdge> {
        let r = seed.rank;
        let mut pm = identity_pullback(2 * r);
        let mut mp = identity_pullback(2 * r);
        for i in 0..r {
            let m = seed.basis_vector(i);
            pm[i] = RationalExpr::from_laurent(plus_minus(&m)?);
            mp[i] = RationalExpr::from_laurent(dt_image(&m)?).recip()?;
        }
        Ok(CrossEdge {
            plus_minus: pm,
            minus_plus: mp,
        })
    }
}

/// Charts for the chambers of `Δ⁺ ∪ Δ⁻` up to a mutation depth, with
/// single-crossing transitions between adjacent chambers on each side and
/// the cross edge between `C⁺` and `C⁻`.
#[derive(Clone, Debug)]
pub struct Atlas {
    pub seed: Seed,
    pub depth: usize,
    pub charts: Vec<Chart>,
    /// `edges[a]`: neighbours `b` with the pullback from `a` to `b`.
    pub edges: Vec<Vec<(usize, Pullback)>>,
}

/// Builds the atlas: breadth-first over the mutation tree to `depth`, one
/// chart per distinct chamber on each side.
pub fn build_atilde(seed: &Seed, depth: usize, cross: &CrossEdge) -> Result<Atlas> {
    let r = seed.rank;
    let mut charts: Vec<Chart> = Vec::new();
    let mut seen: BTreeMap<(Side, Vec<Vec<i64>>), usize> = BTreeMap::new();
    let mut queue = VecDeque::from([(PrincipalSeed::new(seed), 0usize)]);
    while let Some((v, dist)) = queue.pop_front() {
        let mut fresh = false;
        for side in [Side::Plus, Side::Minus] {
            let key = v.chamber_key(side);
            if !seen.contains_key(&(side, key.clone())) {
                seen.insert((side, key.clone()), charts.len());
                charts.push(Chart {
                    id: charts.len(),
                    side,
                    vertex: v.clone(),
                    key,
                });
                fresh = true;
            }
        }
        if fresh && dist < depth {
            for k in seed.unfrozen() {
                if v.path.last() != Some(&k) {
                    queue.push_back((v.mutate(k)?, dist + 1));
                }
            }
        }
    }
    let mut edges = vec![Vec::new(); charts.len()];
    for a in 0..charts.len() {
        for b in 0..charts.len() {
            if a == b || charts[a].side != charts[b].side {
                continue;
            }
            let (ca, cb) = (&charts[a], &charts[b]);
            let missing: Vec<usize> = (0..r)
                .filter(|&j| !cb.key.contains(&ca.vertex.chamber_rays(ca.side)[j]))
                .collect();
            if missing.len() != 1 {
                continue;
            }
            let k = missing[0];
            let n0 = ca.vertex.facet_normal(ca.side, k);
            let vel = linalg::sub(&cb.interior_point(), &ca.interior_point());
            let sign = -linalg::sign(&seed.pair(&n0, &vel)) as i64;
            let wc = WallCrossing::new(n0, Series1::binomial(seed.d[k] as u32), sign);
            edges[a].push((b, crossing_pullback(seed, &wc)?));
        }
    }
    let plus_root = seen[&(Side::Plus, PrincipalSeed::new(seed).chamber_key(Side::Plus))];
    let minus_root = seen[&(
        Side::Minus,
        PrincipalSeed::new(seed).chamber_key(Side::Minus),
    )];
    edges[plus_root].push((minus_root, cross.plus_minus.clone()));
    edges[minus_root].push((plus_root, cross.minus_plus.clone()));
    Ok(Atlas {
        seed: seed.clone(),
        depth,
        charts,
        edges,
    })
}

impl Atlas {
    pub fn count(&self, side: Side) -> usize {
        self.charts.iter().filter(|c| c.side == side).count()
    }

    pub fn root(&self, side: Side) -> usize {
        self.charts
            .iter()
            .position(|c| c.side == side && c.vertex.path.is_empty())
            .expect("root chart")
    }

    /// Shortest route from `a` to `b`, ties broken by chart id.
    pub fn route(&self, a: usize, b: usize) -> Result<Vec<usize>> {
        let mut prev = vec![usize::MAX; self.charts.len()];
        prev[a] = a;
        let mut queue = VecDeque::from([a]);
        while let Some(x) = queue.pop_front() {
            if x == b {
                break;
            }
            let mut next: Vec<usize> = self.edges[x].iter().map(|e| e.0).collect();
            next.sort();
            for y in next {
                if prev[y] == usize::MAX {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[b] == usize::MAX {
            return Err(Error::Input(format!(
                "charts {a} and {b} are not connected"
            )));
        }
        let mut path = vec![b];
        while *path.last().unwrap() != a {
            path.push(prev[*path.last().unwrap()]);
        }
        path.reverse();
        Ok(path)
    }

    /// Pullback along an explicit route.
    pub fn along(&self, route: &[usize]) -> Result<TransitionMap> {
        let mut images = identity_pullback(2 * self.seed.rank);
        for w in route.windows(2) {
            let step = self.edges[w[0]]
                .iter()
                .find(|e| e.0 == w[1])
                .ok_or_else(|| {
                    Error::Input(format!("charts {} and {} are not adjacent", w[0], w[1]))
                })?;
            images = compose(&images, &step.1)?;
        }
        Ok(TransitionMap {
            source: route[0],
            target: *route.last().unwrap(),
            route: route.to_vec(),
            images,
        })
    }

    pub fn transition(&self, a: usize, b: usize) -> Result<TransitionMap> {
        self.along(&self.route(a, b)?)
    }

    pub fn to_json(&self) -> Result<serde_json::Value> {
        let charts: Vec<_> = self
            .charts
            .iter()
            .map(|c| json!({"id": c.id, "side": if c.side == Side::Plus { "+" } else { "-" }, "path": c.vertex.path, "rays": c.key}))
            .collect();
        let mut transitions = Vec::new();
        for (a, es) in self.edges.iter().enumerate() {
            for (b, imgs) in es {
                let pull: Vec<_> = imgs.iter().map(|f| json!({"num": f.numerator().to_json(), "den": f.denominator().to_json()})).collect();
                transitions
                    .push(json!({"source": a, "target": b, "pullback": pull, "truncated": false}));
            }
        }
        Ok(
            json!({"seed": self.seed.to_json(), "depth": self.depth, "charts": charts, "transitions": transitions}),
        )
    }
}

/// Outcome of comparing `𝔭_{a,c}` with `𝔭_{b,c} ∘ 𝔭_{a,b}` over sampled triples.
#[derive(Clone, Debug, Default)]
pub struct CocycleReport {
    pub checked: usize,
    pub failures: Vec<(usize, usize, usize)>,
}

impl CocycleReport {
    pub fn passed(&self) -> bool {
        self.checked > 0 && self.failures.is_empty()
    }
}

/// Triples `(a, b, c)` of distinct charts: all of them when there are at most
/// `max` such, otherwise a seeded sample of `max`.
pub fn sample_triples(atlas: &Atlas, max: usize, rng_seed: u64) -> Vec<(usize, usize, usize)> {
    let n = atlas.charts.len();
    let mut all = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if a != b && b != c && a != c {
                    all.push((a, b, c));
                }
            }
        }
    }
    if all.len() > max {
        let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
        all.shuffle(&mut rng);
        all.truncate(max);
        all.sort();
    }
    all
}

/// Checks the cocycle condition on the coordinate monomials for each triple.
pub fn verify_cocycle(atlas: &Atlas, triples: &[(usize, usize, usize)]) -> Result<CocycleReport> {
    let mut report = CocycleReport::default();
    for &(a, b, c) in triples {
        let direct = atlas.transition(a, c)?;
        let ab = atlas.transition(a, b)?;
        let bc = atlas.transition(b, c)?;
        let via = compose(&ab.images, &bc.images)?;
        report.checked += 1;
        if via != direct.images {
            report.failures.push((a, b, c));
        }
    }
    Ok(report)
}

/// A pullback fixing every `z^{(0, e_i)}` and sending `z^{(f_i, 0)}` to
/// `z^{(f_i, 0)} · u_i` with `u_i` a unit series in the `N`-grading,
/// truncated at `N`-degree `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesPullback {
    pub order: u32,
    pub units: Vec<Laurent>,
}

fn n_grading(r: usize) -> crate::poly::Grading {
    Ring::Prin.grading(r)
}

/// `1 / u` for `u` with `N`-degree-0 part equal to 1.
fn unit_inverse(u: &Laurent, r: usize, k: i64) -> Result<Laurent> {
    let nv = 2 * r;
    let g = n_grading(r);
    let w = Laurent::one(nv).sub(u)?;
    if w.min_degree(g).is_some_and(|d| d < 1) {
        return Err(Error::NonUnit);
    }
    let mut acc = Laurent::one(nv);
    let mut power = Laurent::one(nv);
    for _ in 0..k {
        power = power.mul_truncated(&w, g, k)?;
        if power.is_zero() {
            break;
        }
        acc = acc.add(&power)?;
    }
    Ok(acc)
}

impl SeriesPullback {
    pub fn identity(r: usize, order: u32) -> Self {
        SeriesPullback {
            order,
            units: vec![Laurent::one(2 * r); r],
        }
    }

    fn rank(&self) -> usize {
        self.units.len()
    }

    /// Expands an exact pullback of this shape; fails if it moves some `z^{(0, e_i)}`
    /// or if a denominator has no unit leading part.
    pub fn from_exact(images: &Pullback, order: u32) -> Result<Self> {
        let r = images.len() / 2;
        let g = n_grading(r);
        let k = order as i64;
        for (i, img) in images.iter().enumerate().skip(r) {
            if img != &RationalExpr::var(2 * r, i) {
                return Err(Error::Unsupported(format!("pullback moves coordinate {i}")));
            }
        }
        let mut units = Vec::with_capacity(r);
        for (i, img) in images.iter().enumerate().take(r) {
            let mut f = vec![0; 2 * r];
            f[i] = -1;
            let u = img.mul(&RationalExpr::from_laurent(Laurent::var_power(&f)))?;
            let den = u.denominator();
            let low = den.min_degree(g).unwrap_or(0);
            let lead: Vec<_> = den.terms().filter(|(e, _)| g.degree(e) == low).collect();
            let [(a, c)] = lead.as_slice() else {
                return Err(Error::NonUnit);
            };
            if !c.is_one() {
                return Err(Error::NonUnit);
            }
            let inv_a: Vec<i64> = a.iter().map(|x| -x).collect();
            let one = num_bigint::BigInt::from(1);
            let den1 = den.mul_monomial(&inv_a, &one);
            let num1 = u.numerator().mul_monomial(&inv_a, &one);
            let unit = num1.mul_truncated(&unit_inverse(&den1, r, k)?, g, k)?;
            if unit.min_degree(g).is_some_and(|d| d < 0) {
                return Err(Error::NonUnit);
            }
            units.push(unit);
        }
        Ok(SeriesPullback { order, units })
    }

    /// Image of `Σ c z^{(m, n)}`, with the unit factors truncated at the order.
    pub fn apply_units(
        &self,
        f: &Laurent,
        cache: &mut BTreeMap<(usize, i64), Laurent>,
    ) -> Result<Laurent> {
        let r = self.rank();
        let g = n_grading(r);
        let k = self.order as i64;
        let mut out = Laurent::zero(2 * r);
        for (e, c) in f.terms() {
            let mut t = Laurent::monomial(e.clone(), c.clone());
            for i in 0..r {
                if e[i] == 0 {
                    continue;
                }
                if !cache.contains_key(&(i, e[i])) {
                    let base = if e[i] < 0 {
                        unit_inverse(&self.units[i], r, k)?
                    } else {
                        self.units[i].clone()
                    };
                    let mut p = Laurent::one(2 * r);
                    for _ in 0..e[i].unsigned_abs() {
                        p = p.mul_truncated(&base, g, k)?;
                    }
                    cache.insert((i, e[i]), p);
                }
                let shift = g.degree(e);
                t = t.mul_truncated(&cache[&(i, e[i])], g, shift + k)?;
            }
            out = out.add(&t)?;
        }
        Ok(out)
    }

    /// `self` then `next`.
    pub fn then(&self, next: &SeriesPullback) -> Result<SeriesPullback> {
        let r = self.rank();
        let g = n_grading(r);
        let k = self.order as i64;
        let mut cache = BTreeMap::new();
        let units = (0..r)
            .map(|i| {
                next.units[i].mul_truncated(&next.apply_units(&self.units[i], &mut cache)?, g, k)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SeriesPullback {
            order: self.order,
            units,
        })
    }
}

/// Crossings met walking from the chamber of the initial seed on `side`
/// through the chambers of each prefix of `path`.
pub fn vertex_crossings(seed: &Seed, side: Side, path: &[usize]) -> Result<Vec<WallCrossing>> {
    let mut v = PrincipalSeed::new(seed);
    let mut out = Vec::new();
    for &k in path {
        let w = v.mutate(k)?;
        let centre = |p: &PrincipalSeed| {
            p.chamber_rays(side)
                .iter()
                .fold(vec![linalg::q(0); seed.rank], |acc, r| {
                    linalg::add(&acc, &linalg::qvec(r))
                })
        };
        let n0 = v.facet_normal(side, k);
        let sign = -linalg::sign(&seed.pair(&n0, &linalg::sub(&centre(&w), &centre(&v)))) as i64;
        out.push(WallCrossing::new(
            n0,
            Series1::binomial(seed.d[k] as u32),
            sign,
        ));
        v = w;
    }
    Ok(out)
}

impl SeriesPullback {
    /// Composite of binomial crossings, first applied first.
    pub fn from_crossings(seed: &Seed, seq: &[WallCrossing], order: u32) -> Result<SeriesPullback> {
        let mut acc = SeriesPullback::identity(seed.rank, order);
        for wc in seq {
            acc = acc.then(&SeriesPullback::from_exact(
                &crossing_pullback(seed, wc)?,
                order,
            )?)?;
        }
        Ok(acc)
    }
}

impl Atlas {
    /// Every edge expanded at `N`-degree `order`.
    pub fn series_edges(&self, order: u32) -> Result<Vec<Vec<(usize, SeriesPullback)>>> {
        self.edges
            .iter()
            .map(|es| {
                es.iter()
                    .map(|(b, p)| Ok((*b, SeriesPullback::from_exact(p, order)?)))
                    .collect()
            })
            .collect()
    }
}

/// Composite of expanded edges along a route.
pub fn along_series(
    edges: &[Vec<(usize, SeriesPullback)>],
    route: &[usize],
    r: usize,
    order: u32,
) -> Result<SeriesPullback> {
    let mut acc = SeriesPullback::identity(r, order);
    for w in route.windows(2) {
        let step = &edges[w[0]]
            .iter()
            .find(|e| e.0 == w[1])
            .expect("route follows edges")
            .1;
        acc = acc.then(step)?;
    }
    Ok(acc)
}

/// [`verify_cocycle`] with every transition expanded at `N`-degree `order`.
pub fn verify_cocycle_at(
    atlas: &Atlas,
    triples: &[(usize, usize, usize)],
    order: u32,
) -> Result<CocycleReport> {
    let edges = atlas.series_edges(order)?;
    let r = atlas.seed.rank;
    let mut report = CocycleReport::default();
    for &(a, b, c) in triples {
        let direct = along_series(&edges, &atlas.route(a, c)?, r, order)?;
        let ab = along_series(&edges, &atlas.route(a, b)?, r, order)?;
        let bc = along_series(&edges, &atlas.route(b, c)?, r, order)?;
        report.checked += 1;
        if ab.then(&bc)? != direct {
            report.failures.push((a, b, c));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scattering::apply_sequence;

    fn a2() -> Seed {
        Seed::skew_symmetric(vec![vec![0, 1], vec![-1, 0]]).unwrap()
    }

    fn a2_atlas(depth: usize) -> Atlas {
        let s = a2();
        let dt = DtTransform::new(&s, &[0, 1]).unwrap();
        build_atilde(&s, depth, &CrossEdge::from_dt(&dt).unwrap()).unwrap()
    }

    #[test]
    fn crossing_pullback_matches_series_action() {
        let s = Seed::new(vec![vec![0, 1], vec![-1, 0]], vec![2, 1]).unwrap();
        for (n, c, sign) in [(vec![1, 0], 2, 1), (vec![1, 1], 2, -1), (vec![0, 1], 1, 1)] {
            let wc = WallCrossing::new(n, Series1::binomial(c), sign);
            let imgs = crossing_pullback(&s, &wc).unwrap();
            for e in [vec![2, 0, 0, 0], vec![0, 1, 0, 0], vec![1, -1, 1, 0]] {
                let z = Laurent::var_power(&e);
                let series = apply_sequence(&s, Ring::Prin, std::slice::from_ref(&wc), &z, 8).unwrap();
                let exact = RationalExpr::from_laurent(z.clone())
                    .substitute(&imgs)
                    .unwrap();
                // compare after clearing the denominator
                let den = exact.denominator();
                let lhs = series.mul_truncated(den, Ring::Prin.grading(2), 8).unwrap();
                assert_eq!(
                    lhs,
                    exact.numerator().truncate(Ring::Prin.grading(2), 8),
                    "{e:?}"
                );
            }
        }
    }

    #[test]
    fn a2_atlas_has_five_charts_per_side() {
        let at = a2_atlas(2);
        assert_eq!(at.count(Side::Plus), 5);
        assert_eq!(at.count(Side::Minus), 5);
        // every chamber of the pentagon has two neighbours, the roots also the cross edge
        for (i, es) in at.edges.iter().enumerate() {
            let extra = usize::from(at.charts[i].vertex.path.is_empty());
            assert_eq!(es.len(), 2 + extra, "chart {i}");
        }
    }

    #[test]
    fn depth_zero_has_two_charts() {
        let at = a2_atlas(0);
        assert_eq!(at.charts.len(), 2);
        let t = at.transition(0, 1).unwrap();
        let back = at.transition(1, 0).unwrap();
        assert_eq!(
            compose(&t.images, &back.images).unwrap(),
            identity_pullback(4)
        );
    }

    #[test]
    fn a2_cocycle_on_all_triples() {
        let at = a2_atlas(2);
        let triples = sample_triples(&at, 200, 7);
        let rep = verify_cocycle(&at, &triples).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures);
    }

    #[test]
    fn truncated_cocycle_agrees_with_exact() {
        let at = a2_atlas(2);
        let triples = sample_triples(&at, 40, 3);
        assert!(verify_cocycle_at(&at, &triples, 6).unwrap().passed());
        // expansion of an exact transition equals the composite of expanded edges
        let (a, b) = (at.root(Side::Plus), at.charts.len() - 1);
        let exact = SeriesPullback::from_exact(&at.transition(a, b).unwrap().images, 6).unwrap();
        let edges = at.series_edges(6).unwrap();
        assert_eq!(
            along_series(&edges, &at.route(a, b).unwrap(), 2, 6).unwrap(),
            exact
        );
    }

    #[test]
    fn corrupted_edge_breaks_cocycle() {
        let mut at = a2_atlas(2);
        let a = at.root(Side::Plus);
        let (b, imgs) = at.edges[a][0].clone();
        let mut bad = imgs.clone();
        // an extra factor 1 + x_1
        let x1 =
            RationalExpr::from_laurent(Laurent::var_power(&Ring::Prin.lift(&at.seed, &[1, 0])));
        bad[0] = bad[0]
            .mul(&x1.add(&RationalExpr::constant(4, 1)).unwrap())
            .unwrap();
        at.edges[a][0] = (b, bad);
        let rep = verify_cocycle(&at, &sample_triples(&at, 200, 7)).unwrap();
        assert!(!rep.failures.is_empty());
        let rep = verify_cocycle_at(&at, &sample_triples(&at, 200, 7), 4).unwrap();
        assert!(!rep.failures.is_empty());
    }
}
