//! Approximation by blowups, covering sets, disturbed subgraphs, weighted
//! maximality, and the degree dichotomy / trichotomy for dense triangle-free
//! graphs near the `C5` blowup.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fd::make_fd;
use crate::graph::{degree_profile, find_triangle, two_coloring, Graph, Partition, VertexSet};
use crate::homomorphism::{desurject_reduce, find_homomorphism, Homomorphism};
use crate::rational::{int, rat, serde_str, sq, zero, Rational};
use crate::weighted::WeightedGraph;

/// Largest edge set accepted by [`min_covering_set`].
pub const COVER_GUARD: usize = 10_000;

/// `G` against the blowup `H_V` of `H` along a partition.
#[derive(Clone, Debug, Serialize)]
pub struct ApproximationWitness {
    pub partition: Partition,
    #[serde(skip)]
    pub template: Graph,
    #[serde(skip)]
    pub hv: Graph,
    /// `E(G)` symmetric difference `E(H_V)`, as sorted pairs `u < v`.
    pub diff_edges: Vec<(usize, usize)>,
    /// `max_i ||V_i| - n/k| / n`.
    #[serde(with = "serde_str")]
    pub size_deviation: Rational,
    /// `max(size_deviation, |F| / n^2)`.
    #[serde(with = "serde_str")]
    pub eps_achieved: Rational,
}

impl ApproximationWitness {
    /// Rebuilds `G` as `H_V` symmetric difference `F`.
    pub fn reconstruct(&self) -> Graph {
        let n = self.hv.n();
        let mut edges: Vec<(usize, usize)> =
            self.hv.edges().filter(|e| self.diff_edges.binary_search(e).is_err()).collect();
        edges.extend(self.diff_edges.iter().filter(|&&(u, v)| !self.hv.has_edge(u, v)));
        Graph::new(n, edges).expect("symmetric difference of simple graphs")
    }
}

pub fn check_eps_approximation(g: &Graph, h: &Graph, partition: &Partition) -> Result<ApproximationWitness> {
    if partition.block_count() != h.n() {
        return Err(Error::invalid(format!("{} blocks for a template on {} vertices", partition.block_count(), h.n())));
    }
    if partition.n() != g.n() {
        return Err(Error::invalid("partition does not cover V(G)"));
    }
    let n = g.n();
    let k = h.n();
    let hv_edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| h.has_edge(partition.block_of(u), partition.block_of(v)));
    let hv = Graph::new(n, hv_edges)?;
    let mut diff: Vec<(usize, usize)> = g.edges().filter(|&(u, v)| !hv.has_edge(u, v)).collect();
    diff.extend(hv.edges().filter(|&(u, v)| !g.has_edge(u, v)));
    diff.sort_unstable();
    let size_deviation = if n == 0 || k == 0 {
        zero()
    } else {
        partition
            .blocks()
            .iter()
            .map(|b| rat((k * b.len()).abs_diff(n) as i64, (k * n) as i64))
            .max()
            .unwrap_or_else(zero)
    };
    let edge_part = if n == 0 { zero() } else { rat(diff.len() as i64, (n * n) as i64) };
    let eps_achieved = size_deviation.clone().max(edge_part);
    Ok(ApproximationWitness {
        partition: partition.clone(),
        template: h.clone(),
        hv,
        diff_edges: diff,
        size_deviation,
        eps_achieved,
    })
}

/// A vertex set touching every edge of `covered`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoveringSet {
    pub d_set: VertexSet,
    pub covered: Vec<(usize, usize)>,
}

fn matching_lower_bound(edges: &[(usize, usize)], n: usize) -> usize {
    let mut used = vec![false; n];
    let mut m = 0;
    for &(u, v) in edges {
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            m += 1;
        }
    }
    m
}

fn cover_bb(edges: &[(usize, usize)], n: usize, chosen: &mut Vec<usize>, best: &mut Option<Vec<usize>>) {
    if edges.is_empty() {
        if best.as_ref().is_none_or(|b| chosen.len() < b.len()) {
            *best = Some(chosen.clone());
        }
        return;
    }
    let bound = chosen.len() + matching_lower_bound(edges, n);
    if best.as_ref().is_some_and(|b| bound >= b.len()) {
        return;
    }
    let mut deg = vec![0usize; n];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    // Highest degree, lowest index on ties.
    let v = (0..n).max_by_key(|&x| (deg[x], std::cmp::Reverse(x))).unwrap();

    let rest: Vec<_> = edges.iter().copied().filter(|&(a, b)| a != v && b != v).collect();
    chosen.push(v);
    cover_bb(&rest, n, chosen, best);
    chosen.pop();

    // Leaving `v` out forces all of its neighbors in.
    let mut nbrs: Vec<usize> = edges
        .iter()
        .filter_map(|&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
        .collect();
    nbrs.sort_unstable();
    nbrs.dedup();
    if best.as_ref().is_some_and(|b| chosen.len() + nbrs.len() >= b.len()) {
        return;
    }
    let rest: Vec<_> = edges
        .iter()
        .copied()
        .filter(|&(a, b)| nbrs.binary_search(&a).is_err() && nbrs.binary_search(&b).is_err())
        .collect();
    let mark = chosen.len();
    chosen.extend(nbrs);
    cover_bb(&rest, n, chosen, best);
    chosen.truncate(mark);
}

fn normalized(g: &Graph, f: &[(usize, usize)]) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::with_capacity(f.len());
    for &(u, v) in f {
        if u >= g.n() || v >= g.n() || u == v {
            return Err(Error::invalid(format!("({u},{v}) is not a pair of vertices")));
        }
        out.push((u.min(v), u.max(v)));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Exact minimum vertex cover of `f` by branch and bound.
pub fn min_covering_set(g: &Graph, f: &[(usize, usize)]) -> Result<CoveringSet> {
    if f.len() > COVER_GUARD {
        return Err(Error::ResourceLimit(format!("{} edges exceed the exact cover limit {COVER_GUARD}", f.len())));
    }
    let edges = normalized(g, f)?;
    let mut best = None;
    cover_bb(&edges, g.n(), &mut Vec::new(), &mut best);
    Ok(CoveringSet { d_set: VertexSet::new(best.unwrap_or_default()), covered: edges })
}

/// Both ends of a greedy maximal matching: at most twice the minimum.
pub fn greedy_covering_set(g: &Graph, f: &[(usize, usize)]) -> Result<CoveringSet> {
    let edges = normalized(g, f)?;
    let mut used = vec![false; g.n()];
    for &(u, v) in &edges {
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
        }
    }
    Ok(CoveringSet { d_set: VertexSet::new((0..g.n()).filter(|&v| used[v])), covered: edges })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DisturbedCheck {
    pub holds: bool,
    /// Cover of `E(G) \ E(G')` used for the size condition.
    pub covering_set: VertexSet,
    /// First failed condition, if any.
    pub failure: Option<String>,
}

/// Whether `g` is an `eps`-disturbed subgraph of `g_prime`: same vertices,
/// the extra edges `E(g) \ E(g_prime)` have a cover of size at most
/// `eps n`, and no vertex gains more than `eps n` extra neighbors.
pub fn is_eps_disturbed(g: &Graph, g_prime: &Graph, eps: &Rational) -> DisturbedCheck {
    let fail = |covering_set, msg: String| DisturbedCheck { holds: false, covering_set, failure: Some(msg) };
    if g.n() != g_prime.n() {
        return fail(VertexSet::default(), format!("vertex counts differ: {} vs {}", g.n(), g_prime.n()));
    }
    let n = g.n();
    let cap = eps * int(n as i64);
    let extra: Vec<_> = g.edges().filter(|&(u, v)| !g_prime.has_edge(u, v)).collect();
    let cover = min_covering_set(g, &extra).or_else(|_| greedy_covering_set(g, &extra)).expect("edges come from g");
    if int(cover.d_set.len() as i64) > cap {
        return fail(
            cover.d_set.clone(),
            format!("cover of the {} extra edges needs {} vertices", extra.len(), cover.d_set.len()),
        );
    }
    for v in 0..n {
        let gained = g.neighbors(v).iter().filter(|&&u| !g_prime.has_edge(u, v)).count();
        if int(gained as i64) > cap {
            return fail(cover.d_set, format!("vertex {v} has {gained} extra neighbors"));
        }
    }
    DisturbedCheck { holds: true, covering_set: cover.d_set, failure: None }
}

/// Minimum over non-edges `uv` of the weight of the common neighbors of `u`
/// and `v`. `None` when every pair is an edge.
pub fn weighted_c_maximality(wg: &WeightedGraph) -> Result<Option<Rational>> {
    let g = wg.graph();
    if let Some(t) = find_triangle(g) {
        return Err(Error::PreconditionViolation(format!("graph contains triangle {t:?}")));
    }
    Ok(g.non_edges()
        .map(|(u, v)| g.neighbors(u).iter().filter(|&&w| g.has_edge(v, w)).map(|&w| wg.weight(w)).sum::<Rational>())
        .min())
}

fn edge_hypothesis(g: &Graph, slack: &Rational) -> Result<()> {
    let n2 = int((g.n() * g.n()) as i64);
    let need = (rat(1, 5) - slack) * &n2;
    if int(g.edge_count() as i64) < need {
        return Err(Error::HypothesisViolation(format!(
            "e(G) = {} is below (1/5 - {slack}) n^2 = {need}",
            g.edge_count()
        )));
    }
    Ok(())
}

/// `d <= (2/5 - 2 sqrt(delta)) n`, decided without square roots.
fn is_low_degree(d: usize, n: usize, delta: &Rational) -> bool {
    let gap = rat(2 * n as i64, 5) - int(d as i64);
    gap >= zero() && int(4) * delta * int((n * n) as i64) <= sq(&gap)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DichotomyOutcome {
    /// At least `delta n` vertices have degree at least `(2/5 + delta) n`.
    ManyHighDegree,
    /// At most `2 sqrt(delta) n` vertices have degree at most `(2/5 - 2 sqrt(delta)) n`.
    FewLowDegree,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DichotomyReport {
    pub outcome: DichotomyOutcome,
    pub high_degree: VertexSet,
    pub low_degree: VertexSet,
    pub many_high: bool,
    pub few_low: bool,
}

pub fn degree_dichotomy(g: &Graph, delta: &Rational) -> Result<DichotomyReport> {
    edge_hypothesis(g, delta)?;
    let n = g.n();
    let nn = int(n as i64);
    let high_cut = (rat(2, 5) + delta) * &nn;
    let high_degree = VertexSet::new((0..n).filter(|&v| int(g.degree(v) as i64) >= high_cut));
    let low_degree = VertexSet::new((0..n).filter(|&v| is_low_degree(g.degree(v), n, delta)));
    let many_high = int(high_degree.len() as i64) >= delta * &nn;
    let few_low = sq(&int(low_degree.len() as i64)) <= int(4) * delta * &nn * &nn;
    let outcome = if many_high {
        DichotomyOutcome::ManyHighDegree
    } else if few_low {
        DichotomyOutcome::FewLowDegree
    } else {
        return Err(Error::LemmaViolation(format!(
            "{} high-degree and {} low-degree vertices at delta = {delta}, n = {n}",
            high_degree.len(),
            low_degree.len()
        )));
    };
    Ok(DichotomyReport { outcome, high_degree, low_degree, many_high, few_low })
}

/// The three outcomes, in the order they are tried.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Trichotomy {
    /// (ii) many vertices of degree at least `(2/5 + delta) n`.
    HighDegree,
    /// (iii) deleting at most `eps n^2` edges leaves a bipartite graph.
    NearBipartite,
    /// (i) `eps`-approximated by `C5`.
    C5Approximable,
    /// None of the three could be certified at this size.
    Undetermined,
}

#[derive(Clone, Debug, Serialize)]
pub struct TrichotomyReport {
    #[serde(with = "serde_str")]
    pub eps: Rational,
    #[serde(with = "serde_str")]
    pub delta: Rational,
    pub outcome: Trichotomy,
    pub applicable: Vec<Trichotomy>,
    pub high_degree: VertexSet,
    pub low_degree: VertexSet,
    /// Edges whose deletion leaves a bipartite graph, when found.
    pub bipartite_cut: Option<Vec<(usize, usize)>>,
    pub approximation: Option<ApproximationWitness>,
}

/// `(eps / 40)^2`.
pub fn default_delta(eps: &Rational) -> Rational {
    sq(&(eps / int(40)))
}

/// Block for a low-degree vertex: the one whose blown-up neighborhood is
/// closest to its actual neighborhood (lowest index on ties).
fn closest_block(g: &Graph, v: usize, assign: &[Option<usize>], c5: &Graph) -> usize {
    (0..5)
        .min_by_key(|&j| {
            (0..g.n())
                .filter(|&u| u != v)
                .filter(|&u| {
                    let want = assign[u].is_some_and(|b| c5.has_edge(j, b));
                    want != g.has_edge(u, v)
                })
                .count()
        })
        .unwrap()
}

/// Follows the constructive route: degree dichotomy, then strip the
/// low-degree set `S`, then either a 2-coloring of `G - S` or a map of
/// `G - S` onto `C5` turned into a partition of `G`.
pub fn classify_trichotomy(g: &Graph, eps: &Rational, delta: Option<&Rational>) -> Result<TrichotomyReport> {
    let delta = delta.cloned().unwrap_or_else(|| default_delta(eps));
    if let Some(t) = find_triangle(g) {
        return Err(Error::PreconditionViolation(format!("graph contains triangle {t:?}")));
    }
    let dich = degree_dichotomy(g, &delta)?;
    let n = g.n();
    let n2 = int((n * n) as i64);
    let mut applicable = Vec::new();
    if dich.many_high {
        applicable.push(Trichotomy::HighDegree);
    }

    let s = &dich.low_degree;
    let keep = VertexSet::new((0..n).filter(|&v| !s.contains(v)));
    let rest = g.induced_subgraph(&keep);
    let edges_into_s =
        || -> Vec<(usize, usize)> { g.edges().filter(|&(u, v)| s.contains(u) || s.contains(v)).collect() };

    let mut bipartite_cut = None;
    let mut approximation = None;
    if two_coloring(g).is_some() {
        bipartite_cut = Some(Vec::new());
    } else if two_coloring(&rest).is_some() {
        bipartite_cut = Some(edges_into_s());
    } else {
        let c5 = make_fd(2)?;
        let phi = find_homomorphism(&rest, &c5)?
            .ok_or_else(|| Error::pipeline("homomorphism", "G - S admits no homomorphism to C5"))?;
        if !phi.is_surjective() {
            let to_k2: Homomorphism = desurject_reduce(&phi)?;
            debug_assert!(to_k2.is_edge_preserving());
            bipartite_cut = Some(edges_into_s());
        } else {
            let mut assign: Vec<Option<usize>> = vec![None; n];
            for (i, v) in keep.iter().enumerate() {
                assign[v] = Some(phi.image(i));
            }
            let mut full = vec![0; n];
            for v in 0..n {
                full[v] = match assign[v] {
                    Some(b) => b,
                    None => closest_block(g, v, &assign, &c5),
                };
            }
            let part = Partition::from_assignment(&full, 5)?;
            approximation = Some(check_eps_approximation(g, &c5, &part)?);
        }
    }
    if bipartite_cut.as_ref().is_some_and(|f| int(f.len() as i64) <= eps * &n2) {
        applicable.push(Trichotomy::NearBipartite);
    }
    if approximation.as_ref().is_some_and(|w| &w.eps_achieved <= eps) {
        applicable.push(Trichotomy::C5Approximable);
    }
    let outcome = applicable.first().copied().unwrap_or(Trichotomy::Undetermined);
    Ok(TrichotomyReport {
        eps: eps.clone(),
        delta,
        outcome,
        applicable,
        high_degree: dich.high_degree,
        low_degree: dich.low_degree,
        bipartite_cut,
        approximation,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberBounds {
    pub fiber_sizes: Vec<usize>,
    /// Source minimum degree is at least `(2/5 - delta) n`.
    pub hypothesis: bool,
    /// `(1/5 - 3 delta) n <= |fiber| <= (1/5 + 2 delta) n` for every fiber.
    pub holds: bool,
}

/// Fiber-size bounds for a map onto `C5`.
pub fn fiber_bounds_check(phi: &Homomorphism, delta: &Rational) -> Result<FiberBounds> {
    if phi.target() != &make_fd(2)? {
        return Err(Error::invalid("target must be C5"));
    }
    let g = phi.source();
    let nn = int(g.n() as i64);
    let hypothesis = int(degree_profile(g).min_deg as i64) >= (rat(2, 5) - delta) * &nn;
    let lo = (rat(1, 5) - int(3) * delta) * &nn;
    let hi = (rat(1, 5) + int(2) * delta) * &nn;
    let fiber_sizes = phi.fiber_sizes();
    let holds = fiber_sizes.iter().all(|&s| {
        let s = int(s as i64);
        lo <= s && s <= hi
    });
    Ok(FiberBounds { fiber_sizes, hypothesis, holds })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumSquares {
    /// At least `delta n` vertices of degree at least `(2/5 + delta) n`.
    pub premise: bool,
    /// `(1/n) sum d(v)^2 >= (2n/5)^2`.
    pub conclusion: bool,
}

/// `25/16 delta^5`.
pub fn default_gamma(delta: &Rational) -> Rational {
    rat(25, 16) * sq(&sq(delta)) * delta
}

/// Checks the second-moment implication on `g`; a true premise with a false
/// conclusion is reported as a lemma violation.
pub fn sum_sq_degree_condition(g: &Graph, delta: &Rational, gamma: &Rational) -> Result<SumSquares> {
    edge_hypothesis(g, gamma)?;
    let n = g.n();
    let nn = int(n as i64);
    let cut = (rat(2, 5) + delta) * &nn;
    let high = (0..n).filter(|&v| int(g.degree(v) as i64) >= cut).count();
    let premise = int(high as i64) >= delta * &nn;
    let p = degree_profile(g);
    // (1/n) S >= 4n^2/25  <=>  25 S >= 4 n^3.
    let conclusion = 25 * p.sum_deg_sq as u128 >= 4 * (n as u128).pow(3);
    if premise && !conclusion {
        return Err(Error::LemmaViolation(format!(
            "premise holds but sum of squared degrees is {} for n = {n}",
            p.sum_deg_sq
        )));
    }
    Ok(SumSquares { premise, conclusion })
}
