//! Graph homomorphisms: search, strong-homomorphism checks, the reduction
//! from a non-surjective map into `F_d` to a map into `F_{d-1}`, and the
//! construction of a disturbed pair `(G, G')` with a strong homomorphism
//! `G' -> H*` from an approximation of `G` by a blowup of `H`.

use std::sync::Arc;

use serde::Serialize;

use crate::approximation::{check_eps_approximation, is_eps_disturbed};
use crate::error::{Error, Result};
use crate::fd::{make_fd, star_extension, StarExtension};
use crate::graph::{find_triangle, full_mask, maximality_class, Graph, Partition, VertexSet};
use crate::rational::{int, rat, serde_str, sq, Rational};
use crate::weighted::{balance_deviation, pushforward, WeightFunction};

/// Largest source accepted by [`find_homomorphism`].
pub const HOM_SOURCE_GUARD: usize = 200;
/// Largest target accepted by [`find_homomorphism`].
pub const HOM_TARGET_GUARD: usize = 32;

/// A vertex map between two graphs. Values built with [`Homomorphism::new`]
/// are edge-preserving; [`Homomorphism::new_unchecked`] skips that check so
/// that verifiers can be exercised on broken maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    source: Arc<Graph>,
    target: Arc<Graph>,
    map: Vec<usize>,
}

impl Homomorphism {
    pub fn new(source: impl Into<Arc<Graph>>, target: impl Into<Arc<Graph>>, map: Vec<usize>) -> Result<Self> {
        let phi = Homomorphism::new_unchecked(source, target, map)?;
        if let Some((u, v)) = phi.first_unpreserved_edge() {
            return Err(Error::invalid(format!("edge ({u},{v}) maps to non-edge ({},{})", phi.map[u], phi.map[v])));
        }
        Ok(phi)
    }

    /// Checks only that `map` has the right length and range.
    pub fn new_unchecked(
        source: impl Into<Arc<Graph>>,
        target: impl Into<Arc<Graph>>,
        map: Vec<usize>,
    ) -> Result<Self> {
        let (source, target) = (source.into(), target.into());
        if map.len() != source.n() {
            return Err(Error::invalid(format!("map has {} entries for {} vertices", map.len(), source.n())));
        }
        if let Some(v) = map.iter().position(|&t| t >= target.n()) {
            return Err(Error::invalid(format!("image of {v} is out of range")));
        }
        Ok(Homomorphism { source, target, map })
    }

    pub fn identity(g: impl Into<Arc<Graph>>) -> Self {
        let g = g.into();
        let map = (0..g.n()).collect();
        Homomorphism { source: g.clone(), target: g, map }
    }

    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn source_arc(&self) -> &Arc<Graph> {
        &self.source
    }

    pub fn target_arc(&self) -> &Arc<Graph> {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image(&self, v: usize) -> usize {
        self.map[v]
    }

    /// `phi^{-1}(t)`.
    pub fn fiber(&self, t: usize) -> VertexSet {
        VertexSet::new((0..self.map.len()).filter(|&v| self.map[v] == t))
    }

    pub fn fiber_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.target.n()];
        for &t in &self.map {
            sizes[t] += 1;
        }
        sizes
    }

    pub fn is_surjective(&self) -> bool {
        self.fiber_sizes().iter().all(|&s| s > 0)
    }

    /// First source edge (in edge order) whose image is not an edge.
    pub fn first_unpreserved_edge(&self) -> Option<(usize, usize)> {
        self.source.edges().find(|&(u, v)| !self.target.has_edge(self.map[u], self.map[v]))
    }

    pub fn is_edge_preserving(&self) -> bool {
        self.first_unpreserved_edge().is_none()
    }

    /// First source non-edge whose image is an edge.
    pub fn first_strong_violation(&self) -> Option<(usize, usize)> {
        self.source.non_edges().find(|&(u, v)| self.target.has_edge(self.map[u], self.map[v]))
    }
}

/// Non-edges of the source map to non-edges (or to a single vertex).
pub fn is_strong_homomorphism(phi: &Homomorphism) -> bool {
    phi.first_strong_violation().is_none()
}

fn components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            for &u in g.neighbors(comp[i]) {
                if !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Depth-first assignment of `comp` in increasing vertex order, smallest
/// image first, pruning neighbors' domains as it goes.
fn assign(g: &Graph, hmask: &[u64], comp: &[usize], idx: usize, doms: &mut [u64], map: &mut [usize]) -> bool {
    let Some(&v) = comp.get(idx) else { return true };
    let mut options = doms[v];
    let mut trail: Vec<(usize, u64)> = Vec::new();
    while options != 0 {
        let t = options.trailing_zeros() as usize;
        options &= options - 1;
        let mut ok = true;
        for &u in g.neighbors(v).iter().filter(|&&u| u > v) {
            let old = doms[u];
            let new = old & hmask[t];
            if new != old {
                trail.push((u, old));
                doms[u] = new;
            }
            if new == 0 {
                ok = false;
                break;
            }
        }
        if ok {
            map[v] = t;
            if assign(g, hmask, comp, idx + 1, doms, map) {
                return true;
            }
        }
        for (u, old) in trail.drain(..).rev() {
            doms[u] = old;
        }
    }
    false
}

/// The lexicographically first homomorphism `g -> h` (smallest image for
/// vertex 0, then vertex 1, ...), or `None`.
pub fn find_homomorphism(g: &Graph, h: &Graph) -> Result<Option<Homomorphism>> {
    if g.n() > HOM_SOURCE_GUARD || h.n() > HOM_TARGET_GUARD {
        return Err(Error::ResourceLimit(format!(
            "homomorphism search limited to {HOM_SOURCE_GUARD} -> {HOM_TARGET_GUARD} vertices, got {} -> {}",
            g.n(),
            h.n()
        )));
    }
    if h.n() == 0 {
        return Ok((g.n() == 0).then(|| Homomorphism::new_unchecked(g.clone(), h.clone(), vec![]).unwrap()));
    }
    let hmask = h.masks();
    let mut doms = vec![full_mask(h.n()); g.n()];
    let mut map = vec![0; g.n()];
    // Components are independent, and the lexicographic minimum of a product
    // is the product of per-component minima.
    for comp in components(g) {
        if !assign(g, &hmask, &comp, 0, &mut doms, &mut map) {
            return Ok(None);
        }
    }
    Homomorphism::new(g.clone(), h.clone(), map)
        .map(Some)
        .map_err(|e| Error::TheoremViolation(format!("search returned a non-homomorphism: {e}")))
}

/// `Some(d)` when `g` is exactly `F_d`.
fn fd_order(g: &Graph) -> Option<usize> {
    let n = g.n();
    if n % 3 != 2 {
        return None;
    }
    let d = (n + 1) / 3;
    (make_fd(d).ok()? == *g).then_some(d)
}

/// Turns a homomorphism into `F_d` that misses a vertex into one into
/// `F_{d-1}`.
///
/// Labels are rotated so that the smallest missed vertex becomes `v_1`.
/// Then, with 1-based labels, `{v_d, v_{d+1}}` merge into `v_{d-1}`,
/// `{v_{2d}, v_{2d+1}}` merge into `v_{2d-2}`, and the three runs between
/// shift down by 1, 2 and 3.
pub fn desurject_reduce(phi: &Homomorphism) -> Result<Homomorphism> {
    let d = fd_order(phi.target()).ok_or_else(|| Error::invalid("target is not F_d"))?;
    if d < 2 {
        return Err(Error::invalid("F_1 has no smaller member to reduce to"));
    }
    let sizes = phi.fiber_sizes();
    let Some(missing) = sizes.iter().position(|&s| s == 0) else {
        return Err(Error::NotApplicable("homomorphism is surjective".into()));
    };
    let n = 3 * d - 1;
    let relabel = |t: usize| -> usize {
        let i = (t + n - missing) % n + 1;
        let j = match i {
            _ if i < d => i - 1,
            _ if i <= d + 1 => d - 1,
            _ if i < 2 * d => i - 2,
            _ if i <= 2 * d + 1 => 2 * d - 2,
            _ => i - 3,
        };
        j - 1
    };
    let map = phi.map().iter().map(|&t| relabel(t)).collect();
    Homomorphism::new(phi.source_arc().clone(), make_fd(d - 1)?, map)
        .map_err(|e| Error::TheoremViolation(format!("reduction from F_{d} broke: {e}")))
}

/// Largest `d` accepted by [`surjective_homomorphism_to_fd`].
pub const FD_TARGET_GUARD: usize = (HOM_TARGET_GUARD + 1) / 3;

/// Searches for a homomorphism into `F_{d_max}` and reduces it until it is
/// surjective. Edgeless graphs end at `F_1` without being surjective.
pub fn surjective_homomorphism_to_fd(g: &Graph, d_max: usize) -> Result<Option<(usize, Homomorphism)>> {
    if let Some(t) = find_triangle(g) {
        return Err(Error::PreconditionViolation(format!("graph contains triangle {t:?}")));
    }
    if d_max == 0 || d_max > FD_TARGET_GUARD {
        return Err(Error::invalid(format!("d_max must lie in 1..={FD_TARGET_GUARD}")));
    }
    let Some(mut phi) = find_homomorphism(g, &make_fd(d_max)?)? else {
        return Ok(None);
    };
    let mut d = d_max;
    while d > 1 && !phi.is_surjective() {
        phi = desurject_reduce(&phi)?;
        d -= 1;
    }
    Ok(Some((d, phi)))
}

/// How a vertex of the covering set `J` was placed in `H*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PlacementRule {
    /// `I(v)` is the neighborhood of a vertex of `H`.
    Neighborhood,
    /// `I(v)` is a maximum independent set with its own vertex in `H*`.
    StarVertex,
    /// `I(v)` is only contained in a neighborhood.
    ContainingNeighborhood,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Placement {
    pub vertex: usize,
    /// Blocks where `v` has more than `sqrt(delta) n` neighbors.
    pub i0: VertexSet,
    /// Greedy lexicographically smallest maximal independent superset of `i0`.
    pub i: VertexSet,
    pub image: usize,
    pub rule: PlacementRule,
}

/// `G`, the graph `G'` on the same vertices and a strong homomorphism
/// `G' -> H*`, with the intermediate sets kept for inspection.
#[derive(Clone, Debug)]
pub struct DisturbedPair {
    pub g: Graph,
    pub g_prime: Graph,
    pub star: StarExtension,
    pub phi: Homomorphism,
    pub partition: Partition,
    pub delta: Rational,
    /// `E(G)` symmetric difference `E(H_V)`.
    pub f_edges: Vec<(usize, usize)>,
    /// Vertices incident to at least `sqrt(delta) n` edges of `F`.
    pub j_set: VertexSet,
    pub placements: Vec<Placement>,
}

fn greedy_maximal_superset(h: &Graph, base: &VertexSet) -> VertexSet {
    let mut set: Vec<usize> = base.members().to_vec();
    for i in 0..h.n() {
        if !set.contains(&i) && set.iter().all(|&x| !h.has_edge(i, x)) {
            set.push(i);
        }
    }
    VertexSet::new(set)
}

/// Builds `(G', phi)` from `G` and a partition of it indexed by the vertices
/// of a maximal triangle-free `H`.
///
/// `G` must be `delta`-approximated by `H` through `partition`; the pair is
/// meaningful when `delta > 0`, and `J` only contains vertices with at least
/// one edge in `F`.
pub fn build_disturbed_pair(g: &Graph, h: &Graph, partition: &Partition, delta: &Rational) -> Result<DisturbedPair> {
    if let Some(t) = find_triangle(g) {
        return Err(Error::PreconditionViolation(format!("G contains triangle {t:?}")));
    }
    if !maximality_class(h)?.is_maximal {
        return Err(Error::PreconditionViolation("H is not maximal triangle-free".into()));
    }
    if partition.n() != g.n() {
        return Err(Error::invalid("partition does not cover V(G)"));
    }
    let witness = check_eps_approximation(g, h, partition)?;
    if &witness.eps_achieved > delta {
        return Err(Error::HypothesisViolation(format!(
            "G is only {}-approximated by H, above delta = {delta}",
            witness.eps_achieved
        )));
    }
    let n = g.n();
    let dn2 = delta * int((n * n) as i64);
    let mut f_deg = vec![0usize; n];
    for &(u, v) in &witness.diff_edges {
        f_deg[u] += 1;
        f_deg[v] += 1;
    }
    let j_set = VertexSet::new((0..n).filter(|&v| f_deg[v] > 0 && int((f_deg[v] * f_deg[v]) as i64) >= dn2));
    if int((j_set.len() * j_set.len()) as i64) > int(4) * &dn2 {
        return Err(Error::TheoremViolation(format!("|J| = {} exceeds 2 sqrt(delta) n", j_set.len())));
    }

    let star = star_extension(h)?;
    let k = h.n();
    let nbhds: Vec<VertexSet> = (0..k).map(|i| VertexSet::new(h.neighbors(i).iter().copied())).collect();
    let mut map: Vec<usize> = (0..n).map(|v| partition.block_of(v)).collect();
    let mut placements = Vec::new();
    for v in j_set.iter() {
        let mut counts = vec![0usize; k];
        for &u in g.neighbors(v) {
            counts[partition.block_of(u)] += 1;
        }
        let i0 = VertexSet::new((0..k).filter(|&i| int((counts[i] * counts[i]) as i64) > dn2));
        if !crate::graph::is_independent(h, &i0) {
            return Err(Error::InconsistentInput(format!(
                "heavy blocks {:?} of vertex {v} are not independent in H",
                i0.members()
            )));
        }
        let i = greedy_maximal_superset(h, &i0);
        let (image, rule) = if let Some(x) = nbhds.iter().position(|s| *s == i) {
            (x, PlacementRule::Neighborhood)
        } else if let Some(x) = star.vertex_for(&i) {
            (x, PlacementRule::StarVertex)
        } else if let Some(x) = nbhds.iter().position(|s| i.is_subset(s)) {
            (x, PlacementRule::ContainingNeighborhood)
        } else {
            return Err(Error::InconsistentInput(format!(
                "maximal set {:?} for vertex {v} is neither maximum nor inside a neighborhood",
                i.members()
            )));
        };
        map[v] = image;
        placements.push(Placement { vertex: v, i0, i, image, rule });
    }

    let ext = &star.extension;
    let g_prime = Graph::new(
        n,
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| ext.has_edge(map[u], map[v])),
    )?;
    let phi = Homomorphism::new(g_prime.clone(), ext.clone(), map)
        .map_err(|e| Error::TheoremViolation(format!("G' -> H* broke: {e}")))?;
    Ok(DisturbedPair {
        g: g.clone(),
        g_prime,
        star,
        phi,
        partition: partition.clone(),
        delta: delta.clone(),
        f_edges: witness.diff_edges,
        j_set,
        placements,
    })
}

/// Outcome of the three conclusions for a [`DisturbedPair`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DisturbedReport {
    #[serde(with = "serde_str")]
    pub eps: Rational,
    /// (i) `G` is an `eps`-disturbed subgraph of `G'`.
    pub disturbed: bool,
    pub covering_set: VertexSet,
    pub disturbed_failure: Option<String>,
    /// (ii) the pushforward of the uniform weighting is `eps`-balanced on `H*`.
    pub balanced: bool,
    #[serde(with = "serde_str")]
    pub max_balance_deviation: Rational,
    /// (iii) `phi` is a strong homomorphism.
    pub strong: bool,
    pub strong_violation: Option<(usize, usize)>,
    pub j_size: usize,
    /// `|J| <= 2 sqrt(delta) n`.
    pub j_bound: bool,
    pub pass: bool,
}

pub fn verify_disturbed(dp: &DisturbedPair, eps: &Rational) -> DisturbedReport {
    let n = dp.g.n();
    let dis = is_eps_disturbed(&dp.g, &dp.g_prime, eps);
    let base = dp.star.base.n();
    let max_dev = WeightFunction::uniform(dp.phi.source_arc().clone())
        .and_then(|wf| pushforward(&wf, &dp.phi))
        .map(|w| balance_deviation(&w, base))
        .unwrap_or_else(|_| rat(1, 1));
    let balanced = &max_dev <= eps;
    let strong_violation = dp.phi.first_unpreserved_edge().or_else(|| dp.phi.first_strong_violation());
    let j_bound = sq(&int(dp.j_set.len() as i64)) <= int(4) * &dp.delta * int((n * n) as i64);
    DisturbedReport {
        eps: eps.clone(),
        disturbed: dis.holds,
        covering_set: dis.covering_set,
        disturbed_failure: dis.failure,
        balanced,
        max_balance_deviation: max_dev,
        strong: strong_violation.is_none(),
        strong_violation,
        j_size: dp.j_set.len(),
        j_bound,
        pass: dis.holds && balanced && strong_violation.is_none() && j_bound,
    }
}

/// `(k + 2) sqrt(delta) <= min(eps, 1/k)`, decided by squaring.
pub fn delta_fits(k: usize, delta: &Rational, eps: &Rational) -> bool {
    let kk = int(k as i64);
    let cap = if eps < &rat(1, k as i64) { eps.clone() } else { rat(1, k as i64) };
    sq(&(kk + int(2))) * delta <= sq(&cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fd::make_petersen;
    use crate::graph::generators::{complete, complete_bipartite, cycle};
    use crate::graph::{blowup, perturb};

    /// Independent edge-preservation scan.
    fn preserves(g: &Graph, h: &Graph, map: &[usize]) -> bool {
        (0..g.n()).all(|u| g.neighbors(u).iter().all(|&v| h.has_edge(map[u], map[v])))
    }

    /// Exhaustive search for any homomorphism on tiny inputs.
    fn brute_exists(g: &Graph, h: &Graph) -> bool {
        let total = h.n().pow(g.n() as u32);
        (0..total).any(|mut code| {
            let map: Vec<usize> = (0..g.n())
                .map(|_| {
                    let t = code % h.n();
                    code /= h.n();
                    t
                })
                .collect();
            preserves(g, h, &map)
        })
    }

    #[test]
    fn search_examples() {
        let c5 = make_fd(2).unwrap();
        let (g, part) = blowup(&c5, &[2; 5]).unwrap();
        let phi = find_homomorphism(&g, &c5).unwrap().unwrap();
        assert!(preserves(&g, &c5, phi.map()));
        // The lexicographically first map is the projection here.
        assert_eq!(phi.map(), part.assignment());

        let f3 = make_fd(3).unwrap();
        let phi = find_homomorphism(&c5, &f3).unwrap().unwrap();
        assert!(preserves(&c5, &f3, phi.map()));

        assert!(find_homomorphism(&make_petersen(), &c5).unwrap().is_none());
        assert!(find_homomorphism(&c5, &complete(2)).unwrap().is_none());
    }

    #[test]
    fn search_agrees_with_brute_force() {
        let graphs = [cycle(4), cycle(5), cycle(6), cycle(7), complete(3), complete_bipartite(2, 3)];
        let targets = [complete(2), cycle(5), complete(3), make_fd(3).unwrap()];
        for g in &graphs {
            for h in &targets {
                let found = find_homomorphism(g, h).unwrap();
                assert_eq!(found.is_some(), brute_exists(g, h), "{g:?} -> {h:?}");
            }
        }
    }

    #[test]
    fn search_guards() {
        let big = Graph::empty(201);
        assert!(matches!(find_homomorphism(&big, &complete(2)), Err(Error::ResourceLimit(_))));
        assert!(matches!(find_homomorphism(&complete(2), &Graph::empty(33)), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn strong_examples() {
        let c5 = make_fd(2).unwrap();
        let (g, part) = blowup(&c5, &[1, 2, 3, 1, 2]).unwrap();
        let proj = Homomorphism::new(g, c5.clone(), part.assignment().to_vec()).unwrap();
        assert!(is_strong_homomorphism(&proj));

        let c6 = cycle(6);
        let coloring = (0..6).map(|v| v % 2).collect();
        let phi = Homomorphism::new(c6, complete(2), coloring).unwrap();
        assert!(!is_strong_homomorphism(&phi));
        // 0 and 3 are antipodal, non-adjacent, and get different colors.
        assert_eq!(phi.first_strong_violation(), Some((0, 3)));

        assert!(is_strong_homomorphism(&Homomorphism::identity(make_petersen())));
    }

    #[test]
    fn desurject_c5_into_f3() {
        let c5 = make_fd(2).unwrap();
        let f3 = make_fd(3).unwrap();
        let phi = find_homomorphism(&c5, &f3).unwrap().unwrap();
        assert!(!phi.is_surjective());
        let red = desurject_reduce(&phi).unwrap();
        assert_eq!(red.target(), &c5);
        assert!(preserves(&c5, &c5, red.map()));
        assert!(red.is_surjective());
    }

    #[test]
    fn desurject_bipartite_to_k2() {
        let c4 = cycle(4);
        let c5 = make_fd(2).unwrap();
        // Images 0 and 2 are adjacent in the circulant C5.
        let phi = Homomorphism::new(c4.clone(), c5, vec![0, 2, 0, 2]).unwrap();
        let red = desurject_reduce(&phi).unwrap();
        assert_eq!(red.target(), &complete(2));
        assert!(preserves(&c4, &complete(2), red.map()));
    }

    #[test]
    fn desurject_every_missing_vertex_every_d() {
        for d in 2..=7 {
            let fd = make_fd(d).unwrap();
            let n = 3 * d - 1;
            for missing in 0..n {
                let keep = VertexSet::new((0..n).filter(|&v| v != missing));
                let sub = fd.induced_subgraph(&keep);
                let map = keep.members().to_vec();
                let phi = Homomorphism::new(sub.clone(), fd.clone(), map).unwrap();
                let red = desurject_reduce(&phi).unwrap();
                let fd1 = make_fd(d - 1).unwrap();
                assert!(preserves(&sub, &fd1, red.map()), "d={d} missing={missing}");
                assert!(sub.edges().all(|(u, v)| red.image(u) != red.image(v)));
            }
        }
    }

    #[test]
    fn desurject_errors() {
        let c5 = make_fd(2).unwrap();
        assert!(matches!(desurject_reduce(&Homomorphism::identity(c5)), Err(Error::NotApplicable(_))));
        let k2 = complete(2);
        let phi = Homomorphism::new(Graph::empty(1), k2, vec![0]).unwrap();
        assert!(matches!(desurject_reduce(&phi), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn surjective_pipeline_examples() {
        let f5 = make_fd(5).unwrap();
        let (g, _) = blowup(&f5, &[2; 14]).unwrap();
        let (d, phi) = surjective_homomorphism_to_fd(&g, 5).unwrap().unwrap();
        assert!(d <= 5 && phi.is_surjective() && preserves(&g, phi.target(), phi.map()));

        let c5 = make_fd(2).unwrap();
        let (g, _) = blowup(&c5, &[3, 1, 2, 2, 4]).unwrap();
        let (d, phi) = surjective_homomorphism_to_fd(&g, 5).unwrap().unwrap();
        assert_eq!(d, 2);
        assert!(phi.is_surjective());

        let (d, phi) = surjective_homomorphism_to_fd(&complete_bipartite(3, 4), 5).unwrap().unwrap();
        assert_eq!(d, 1);
        assert!(phi.is_surjective());

        assert!(matches!(surjective_homomorphism_to_fd(&complete(3), 5), Err(Error::PreconditionViolation(_))));
    }

    #[test]
    fn disturbed_pair_on_exact_blowup() {
        let p = make_petersen();
        let (g, part) = blowup(&p, &[5; 10]).unwrap();
        for delta in [rat(0, 1), rat(1, 50), rat(1, 14400)] {
            let dp = build_disturbed_pair(&g, &p, &part, &delta).unwrap();
            assert!(dp.j_set.is_empty() && dp.f_edges.is_empty());
            assert_eq!(dp.g_prime, g);
            assert_eq!(dp.phi.map(), part.assignment());
            let report = verify_disturbed(&dp, &rat(0, 1));
            assert!(report.pass, "{report:?}");
        }
    }

    #[test]
    fn disturbed_pair_after_removals() {
        let p = make_petersen();
        let (g, part) = blowup(&p, &[5; 10]).unwrap();
        let removed: Vec<(usize, usize)> = g.edges().step_by(37).take(3).collect();
        let pg = perturb(&g, &[], &removed).unwrap();
        assert!(pg.triangle_free);
        let delta = rat(1, 50);
        let dp = build_disturbed_pair(&pg.graph, &p, &part, &delta).unwrap();
        assert_eq!(dp.f_edges.len(), 3);
        let report = verify_disturbed(&dp, &rat(1, 10));
        assert!(report.pass, "{report:?}");
    }

    #[test]
    fn disturbed_pair_relocated_vertex_uses_star_vertex() {
        // Blocks of 8 keep each heavy block above sqrt(delta) n.
        let p = make_petersen();
        let (g, part) = blowup(&p, &[8; 10]).unwrap();
        let star = star_extension(&p).unwrap();
        let (w, set) = star.added.iter().find(|(_, s)| !s.contains(0)).cloned().unwrap();
        // Rewire vertex 0 to be complete to the blocks of a star set.
        let v = 0;
        let remove: Vec<_> = g.neighbors(v).iter().map(|&u| (v, u)).collect();
        let add: Vec<_> = set.iter().flat_map(|b| part.blocks()[b].iter()).map(|u| (v, u)).collect();
        let add: Vec<_> = add.into_iter().filter(|e| !remove.contains(e)).collect();
        let remove: Vec<_> = remove.into_iter().filter(|&(_, u)| !set.contains(part.block_of(u))).collect();
        let pg = perturb(&g, &add, &remove).unwrap();
        assert!(pg.triangle_free);
        let f = add.len() + remove.len();
        let delta = rat(f as i64, 6400);
        let dp = build_disturbed_pair(&pg.graph, &p, &part, &delta).unwrap();
        assert!(dp.j_set.contains(v));
        let placed = dp.placements.iter().find(|pl| pl.vertex == v).unwrap();
        assert_eq!(placed.rule, PlacementRule::StarVertex);
        assert_eq!(placed.image, w);
        assert!(is_strong_homomorphism(&dp.phi));
    }

    #[test]
    fn disturbed_pair_c5_star_is_trivial() {
        let c5 = make_fd(2).unwrap();
        let (g, part) = blowup(&c5, &[2; 5]).unwrap();
        let dp = build_disturbed_pair(&g, &c5, &part, &rat(1, 100)).unwrap();
        assert_eq!(dp.star.extension, c5);
        assert!(dp.phi.is_surjective());
    }

    #[test]
    fn corrupted_map_is_reported() {
        let p = make_petersen();
        let (g, part) = blowup(&p, &[5; 10]).unwrap();
        let mut dp = build_disturbed_pair(&g, &p, &part, &rat(1, 100)).unwrap();
        let mut map = dp.phi.map().to_vec();
        map[0] = 1;
        dp.phi = Homomorphism::new_unchecked(dp.g_prime.clone(), dp.star.extension.clone(), map).unwrap();
        let report = verify_disturbed(&dp, &rat(1, 10));
        assert!(!report.strong && !report.pass);
        assert!(report.strong_violation.is_some());
    }

    #[test]
    fn delta_relation() {
        assert!(delta_fits(10, &rat(1, 14400), &rat(1, 10)));
        assert!(!delta_fits(10, &rat(1, 14399), &rat(1, 10)));
        assert!(delta_fits(10, &rat(1, 57600), &rat(1, 20)));
    }
}
