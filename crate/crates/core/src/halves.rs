//! Explicit sparse halves: the five constructions on weighted `F_d`, the
//! uniform distributions on balanced `C5` and `P*`, and the pipeline from a
//! triangle-free graph of minimum degree `5n/14` to a sparse vertex set.

use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fd::{make_fd, make_petersen, star_extension, StarExtension};
use crate::graph::{degree_profile, find_triangle, induced_edge_count, Graph, VertexSet};
use crate::homomorphism::surjective_homomorphism_to_fd;
use crate::rational::{fiftieth, half, int, rat, serde_str, zero, Rational};
use crate::weighted::{
    balance_deviation, edge_mass, lift_half, pushforward, round_half_to_set, weighted_min_degree, Half,
    HalfDistribution, WeightFunction,
};

/// The minimum weighted degree required on `F_3`, `F_4` and `F_5`.
pub fn min_degree_threshold() -> Rational {
    rat(5, 14)
}

/// A weighting of `F_d`, `1 <= d <= 5`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FdWeighting {
    d: usize,
    wf: Arc<WeightFunction>,
}

impl FdWeighting {
    pub fn new(d: usize, w: Vec<Rational>) -> Result<Self> {
        if !(1..=5).contains(&d) {
            return Err(Error::invalid(format!("constructions exist for 1 <= d <= 5, got {d}")));
        }
        Ok(FdWeighting { d, wf: Arc::new(WeightFunction::new(make_fd(d)?, w)?) })
    }

    pub fn uniform(d: usize) -> Result<Self> {
        let n = 3 * d.max(1) - 1;
        FdWeighting::new(d, vec![rat(1, n as i64); n])
    }

    /// Wraps a weighting whose graph is `F_d`.
    pub fn from_weight_function(wf: Arc<WeightFunction>) -> Result<Self> {
        let n = wf.graph().n();
        let d = (n + 1) / 3;
        if n % 3 != 2 || d > 5 || make_fd(d)? != *wf.graph() {
            return Err(Error::invalid("weighted graph is not F_d with d <= 5"));
        }
        Ok(FdWeighting { d, wf })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn weighting(&self) -> &Arc<WeightFunction> {
        &self.wf
    }

    fn w(&self, i: usize) -> &Rational {
        let n = 3 * self.d - 1;
        self.wf.weight(i % n)
    }
}

/// `w` on `window` in order, the last vertex cut so that the total is 1/2.
fn truncated_window(wf: &Arc<WeightFunction>, window: &[usize]) -> Result<Half> {
    let mut s = vec![zero(); wf.graph().n()];
    let mut left = half();
    for &v in window {
        let take = if wf.weight(v) < &left { wf.weight(v).clone() } else { left.clone() };
        left -= &take;
        s[v] = take;
    }
    Half::new(wf.clone(), s)
}

/// First window of `len` cyclically consecutive vertices of weight at least 1/2.
fn heavy_window(fw: &FdWeighting, len: usize) -> Option<Vec<usize>> {
    let n = 3 * fw.d - 1;
    (0..n)
        .map(|i| (i..i + len).map(|j| j % n).collect::<Vec<_>>())
        .find(|win| win.iter().map(|&v| fw.wf.weight(v)).sum::<Rational>() >= half())
}

/// `w` on `v_{i+1}, .., v_{i+d}` and `(1/2 - that weight)/2` on `v_i` and
/// `v_{i+d+1}`, for `d` in {3, 4}.
fn sandwich_half(fw: &FdWeighting, i: usize) -> Result<Half> {
    let d = fw.d;
    let n = 3 * d - 1;
    let inner: Vec<usize> = (i + 1..=i + d).map(|j| j % n).collect();
    let weight: Rational = inner.iter().map(|&v| fw.w(v)).sum();
    let r = (half() - weight) / int(2);
    let mut s = vec![zero(); n];
    for &v in &inner {
        s[v] = fw.w(v).clone();
    }
    s[i % n] = r.clone();
    s[(i + d + 1) % n] = r;
    Half::new(fw.wf.clone(), s)
}

/// `w` on `v_i, v_{i+1}` and the rest of the half on `v_{i+2}`.
fn c5_half(wf: &Arc<WeightFunction>, i: usize) -> Result<Half> {
    let mut s = vec![zero(); 5];
    let (a, b, c) = (i % 5, (i + 1) % 5, (i + 2) % 5);
    s[a] = wf.weight(a).clone();
    s[b] = wf.weight(b).clone();
    s[c] = half() - wf.weight(a) - wf.weight(b);
    Half::new(wf.clone(), s)
}

fn require_min_degree(fw: &FdWeighting) -> Result<()> {
    let md = weighted_min_degree(&fw.wf);
    if md < min_degree_threshold() {
        return Err(Error::HypothesisViolation(format!("weighted minimum degree {md} of F_{} is below 5/14", fw.d)));
    }
    Ok(())
}

/// The candidate halves for each `d`. A heavy independent window, when one
/// exists, is returned alone.
pub fn construct_fd_halves(fw: &FdWeighting) -> Result<Vec<Half>> {
    let d = fw.d;
    if d >= 3 {
        require_min_degree(fw)?;
    }
    let n = 3 * d - 1;
    match d {
        1 => {
            let v = if fw.w(0) >= fw.w(1) { 0 } else { 1 };
            Ok(vec![truncated_window(&fw.wf, &[v])?])
        }
        2..=4 => {
            if let Some(win) = heavy_window(fw, d) {
                return Ok(vec![truncated_window(&fw.wf, &win)?]);
            }
            (0..n)
                .map(|i| if d == 2 { c5_half(&fw.wf, i) } else { sandwich_half(fw, i) })
                .collect::<Result<Vec<_>>>()
                .map_err(|e| Error::TheoremViolation(format!("F_{d} construction is not a half: {e}")))
        }
        _ => Ok(vec![truncated_window(&fw.wf, &(0..7).collect::<Vec<_>>())?]),
    }
}

/// The constructed half of least edge mass (lowest index on ties); it is
/// always sparse.
pub fn best_sparse_half_fd(fw: &FdWeighting) -> Result<Half> {
    let halves = construct_fd_halves(fw)?;
    let mut best: Option<(Rational, Half)> = None;
    for h in halves {
        let m = edge_mass(&h);
        if best.as_ref().is_none_or(|(bm, _)| &m < bm) {
            best = Some((m, h));
        }
    }
    let (mass, h) = best.expect("every case yields at least one half");
    if mass > fiftieth() {
        let w: Vec<String> = fw.wf.weights().iter().map(crate::rational::fmt).collect();
        return Err(Error::TheoremViolation(format!(
            "no sparse half on F_{} with weights [{}]; best mass {mass}",
            fw.d,
            w.join(", ")
        )));
    }
    Ok(h)
}

fn require_balanced(wf: &WeightFunction, base: usize, eps: &Rational) -> Result<()> {
    let dev = balance_deviation(wf, base);
    if &dev > eps {
        return Err(Error::HypothesisViolation(format!("weights deviate by {dev}, above {eps}")));
    }
    Ok(())
}

/// The five halves `s_i` with probability 1/5 each, for a 1/50-balanced `C5`.
pub fn c5_uniform_distribution(wf: &Arc<WeightFunction>) -> Result<HalfDistribution> {
    if wf.graph() != &make_fd(2)? {
        return Err(Error::invalid("weighted graph is not C5"));
    }
    require_balanced(wf, 5, &fiftieth())?;
    let halves = (0..5).map(|i| c5_half(wf, i)).collect::<Result<Vec<_>>>()?;
    HalfDistribution::uniform(halves)
}

/// One half of the `P*` family: the star vertex `i`, one of the four
/// transversals of the matching `V \ N(w_i)`, and the partner star vertex
/// adjacent to the other three matching vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PStarTerm {
    /// Star index in `0..5`; the vertex is `10 + star`.
    pub star: usize,
    pub partner: usize,
    pub triple: [usize; 3],
    pub complement: [usize; 3],
}

/// `P*` with its 20 half-defining terms, ordered by star then triple.
#[derive(Clone, Debug)]
pub struct PStarLayout {
    pub ext: StarExtension,
    pub matchings: Vec<[(usize, usize); 3]>,
    pub terms: Vec<PStarTerm>,
}

impl PStarLayout {
    pub fn graph(&self) -> &Graph {
        &self.ext.extension
    }

    /// Extension index of star `i`.
    pub fn star_vertex(&self, i: usize) -> usize {
        self.ext.base.n() + i
    }
}

/// Derives the `P*` term structure by exhaustive search and checks its
/// shape: each `V \ N(w_i)` is a 3-edge matching with exactly four
/// admissible transversals, with distinct partners.
pub fn pstar_layout() -> Result<PStarLayout> {
    let p = make_petersen();
    let ext = star_extension(&p)?;
    if ext.added.len() != 5 {
        return Err(Error::StructureViolation(format!("{} star vertices instead of 5", ext.added.len())));
    }
    let g = &ext.extension;
    let mut matchings = Vec::new();
    let mut terms = Vec::new();
    for (i, (_, set)) in ext.added.iter().enumerate() {
        let rest = VertexSet::new((0..10).filter(|&v| !set.contains(v)));
        let sub_edges: Vec<(usize, usize)> = p.edges().filter(|&(a, b)| rest.contains(a) && rest.contains(b)).collect();
        let is_matching = sub_edges.len() == 3
            && rest.iter().all(|v| sub_edges.iter().filter(|&&(a, b)| a == v || b == v).count() == 1);
        if !is_matching {
            return Err(Error::StructureViolation(format!("V \\ N(w_{i}) does not induce a 3-edge matching")));
        }
        let m: [(usize, usize); 3] = [sub_edges[0], sub_edges[1], sub_edges[2]];
        let mut found = Vec::new();
        for mask in 0..8u32 {
            let pick = |k: usize| if mask >> k & 1 == 0 { m[k].0 } else { m[k].1 };
            let other = |k: usize| if mask >> k & 1 == 0 { m[k].1 } else { m[k].0 };
            let mut triple = [pick(0), pick(1), pick(2)];
            let mut complement = [other(0), other(1), other(2)];
            triple.sort_unstable();
            complement.sort_unstable();
            let partners: Vec<usize> =
                (0..5).filter(|&q| q != i && complement.iter().all(|&c| ext.added[q].1.contains(c))).collect();
            if let [partner] = partners[..] {
                found.push(PStarTerm { star: i, partner, triple, complement });
            }
        }
        found.sort_by_key(|a| a.triple);
        let mut partners: Vec<usize> = found.iter().map(|t| t.partner).collect();
        partners.dedup();
        partners.sort_unstable();
        partners.dedup();
        if found.len() != 4 || partners.len() != 4 {
            return Err(Error::StructureViolation(format!(
                "star {i} has {} admissible triples with {} partners",
                found.len(),
                partners.len()
            )));
        }
        debug_assert!(found.iter().all(|t| crate::graph::is_independent(g, &VertexSet::new(t.triple))));
        matchings.push(m);
        terms.extend(found);
    }
    Ok(PStarLayout { ext, matchings, terms })
}

/// `s_{i,j}` for one term.
fn pstar_half(layout: &PStarLayout, wf: &Arc<WeightFunction>, t: &PStarTerm) -> Result<Half> {
    let wi = layout.star_vertex(t.star);
    let wq = layout.star_vertex(t.partner);
    let quarter = wf.weight(wq) / int(4);
    let tri: Rational = t.triple.iter().map(|&v| wf.weight(v)).sum();
    let r = (half() - (&tri + wf.weight(wi) + &quarter)) / int(3);
    for &c in &t.complement {
        if r.clone() * int(3) < *wf.weight(c) {
            return Err(Error::TheoremViolation(format!("share {r} on vertex {c} is below a third of its weight")));
        }
    }
    let mut s = vec![zero(); wf.graph().n()];
    s[wi] = wf.weight(wi).clone();
    s[wq] = quarter;
    for &v in &t.triple {
        s[v] = wf.weight(v).clone();
    }
    for &c in &t.complement {
        s[c] = r.clone();
    }
    Half::new(wf.clone(), s)
}

/// The 20 halves `s_{i,j}` with probability 1/20 each, for a
/// 1/500-balanced `P*`.
pub fn pstar_uniform_distribution(wf: &Arc<WeightFunction>) -> Result<HalfDistribution> {
    let layout = pstar_layout()?;
    pstar_distribution_with(&layout, wf)
}

/// [`pstar_uniform_distribution`] reusing a computed layout.
pub fn pstar_distribution_with(layout: &PStarLayout, wf: &Arc<WeightFunction>) -> Result<HalfDistribution> {
    if wf.graph() != layout.graph() {
        return Err(Error::invalid("weighted graph is not P*"));
    }
    require_balanced(wf, 10, &rat(1, 500))?;
    let halves = layout.terms.iter().map(|t| pstar_half(layout, wf, t)).collect::<Result<Vec<_>>>()?;
    HalfDistribution::uniform(halves)
}

/// Stage outputs of [`sparse_half_pipeline`].
#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport {
    pub n: usize,
    pub d: usize,
    pub fiber_sizes: Vec<usize>,
    #[serde(with = "serde_str")]
    pub fd_half_mass: Rational,
    #[serde(with = "serde_str")]
    pub lifted_mass: Rational,
    pub set: VertexSet,
    pub induced_edges: usize,
    /// `n^2 / 50`, rounded down.
    pub bound: usize,
}

/// A set of `floor(n/2)` vertices spanning at most `n^2/50` edges in a
/// triangle-free graph of minimum degree at least `5n/14`.
pub fn sparse_half_min_degree(g: &Graph) -> Result<VertexSet> {
    sparse_half_pipeline(g).map(|r| r.set)
}

pub fn sparse_half_pipeline(g: &Graph) -> Result<PipelineReport> {
    let n = g.n();
    if n == 0 {
        return Err(Error::invalid("empty graph"));
    }
    if let Some(t) = find_triangle(g) {
        return Err(Error::PreconditionViolation(format!("graph contains triangle {t:?}")));
    }
    if 14 * degree_profile(g).min_deg < 5 * n {
        return Err(Error::PreconditionViolation("minimum degree is below 5n/14".into()));
    }
    let (d, phi) = surjective_homomorphism_to_fd(g, 5)
        .map_err(|e| Error::pipeline("homomorphism", e.to_string()))?
        .ok_or_else(|| Error::pipeline("homomorphism", "no homomorphism into F_5"))?;
    if !phi.is_surjective() {
        return Err(Error::pipeline("homomorphism", format!("map into F_{d} is not surjective")));
    }
    let wf = Arc::new(WeightFunction::uniform(g.clone())?);
    let pushed = Arc::new(pushforward(&wf, &phi)?);
    let fw = FdWeighting::from_weight_function(pushed)?;
    let fd_half = best_sparse_half_fd(&fw)?;
    let lifted = lift_half(&fd_half, &phi, &wf)?;
    let lifted_mass = edge_mass(&lifted);
    let set = round_half_to_set(&lifted)?;
    let induced_edges = induced_edge_count(g, &set);
    if set.len() != n / 2 || 50 * induced_edges > n * n {
        return Err(Error::TheoremViolation(format!(
            "pipeline returned {} vertices spanning {induced_edges} edges for n = {n}",
            set.len()
        )));
    }
    Ok(PipelineReport {
        n,
        d,
        fiber_sizes: phi.fiber_sizes(),
        fd_half_mass: edge_mass(&fd_half),
        lifted_mass,
        set,
        induced_edges,
        bound: n * n / 50,
    })
}

/// Sum of the edge masses of the five `C5` halves; never above 1/10.
pub fn c5_jensen_sum(wf: &Arc<WeightFunction>) -> Result<Rational> {
    let mut total = zero();
    for i in 0..5 {
        let mut s = vec![zero(); 5];
        s[i] = wf.weight(i).clone();
        s[(i + 1) % 5] = wf.weight((i + 1) % 5).clone();
        // The third value may exceed w outside the balanced regime, so the
        // mass is evaluated directly rather than through `Half`.
        s[(i + 2) % 5] = half() - wf.weight(i) - wf.weight((i + 1) % 5);
        total += wf
            .graph()
            .edges()
            .filter(|&(u, v)| !s[u].is_zero() && !s[v].is_zero())
            .map(|(u, v)| &s[u] * &s[v])
            .sum::<Rational>();
    }
    Ok(total)
}
