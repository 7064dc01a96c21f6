//! Weight functions, halves and distributions over halves, all in exact
//! rational arithmetic.
//!
//! A half `s` of a weighted graph `(G, w)` satisfies `0 <= s(v) <= w(v)` and
//! `sum s = 1/2`; its edge mass is `sum over edges uv of s(u) s(v)`, and it is
//! sparse when the edge mass is at most `1/50`. Extremal instances hit `1/50`
//! exactly, so nothing here ever touches floating point.

use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::homomorphism::Homomorphism;
use crate::rational::{fiftieth, half, int, one, rat, zero, Rational};

/// A vertex weighting summing to one. Zero weights are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFunction {
    graph: Arc<Graph>,
    w: Vec<Rational>,
}

/// A graph together with its weight function.
pub type WeightedGraph = WeightFunction;

impl WeightFunction {
    pub fn new(graph: impl Into<Arc<Graph>>, w: Vec<Rational>) -> Result<Self> {
        let graph = graph.into();
        if w.len() != graph.n() {
            return Err(Error::InvalidWeights(format!("{} weights for {} vertices", w.len(), graph.n())));
        }
        if let Some(v) = w.iter().position(|x| x.is_negative()) {
            return Err(Error::InvalidWeights(format!("negative weight at vertex {v}")));
        }
        let total: Rational = w.iter().sum();
        if total != one() {
            return Err(Error::InvalidWeights(format!("weights sum to {total}, not 1")));
        }
        Ok(WeightFunction { graph, w })
    }

    /// Every vertex weighted `1/n`.
    pub fn uniform(graph: impl Into<Arc<Graph>>) -> Result<Self> {
        let graph = graph.into();
        let n = graph.n();
        if n == 0 {
            return Err(Error::InvalidWeights("the empty graph has no weight function".into()));
        }
        let w = vec![rat(1, n as i64); n];
        Ok(WeightFunction { graph, w })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn graph_arc(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn weights(&self) -> &[Rational] {
        &self.w
    }

    pub fn weight(&self, v: usize) -> &Rational {
        &self.w[v]
    }

    pub fn edge_weight(&self, u: usize, v: usize) -> Rational {
        &self.w[u] * &self.w[v]
    }

    pub fn set_weight(&self, s: &VertexSet) -> Rational {
        s.iter().map(|v| &self.w[v]).sum()
    }

    pub fn is_uniform(&self) -> bool {
        self.w.windows(2).all(|p| p[0] == p[1])
    }

    /// Weighted degree `w(N(v))`.
    pub fn weighted_degree(&self, v: usize) -> Rational {
        self.graph.neighbors(v).iter().map(|&u| &self.w[u]).sum()
    }
}

/// Minimum over vertices of the weighted degree.
pub fn weighted_min_degree(wf: &WeightFunction) -> Rational {
    (0..wf.graph().n()).map(|v| wf.weighted_degree(v)).min().unwrap_or_else(zero)
}

/// Largest deviation of a weighting on `H*` from balance: `|w(v) - 1/base|`
/// over the first `base` vertices, `w(v)` over the added ones.
pub fn balance_deviation(wf: &WeightFunction, base: usize) -> Rational {
    let target = rat(1, base.max(1) as i64);
    wf.weights()
        .iter()
        .enumerate()
        .map(|(v, w)| if v < base { (w - &target).abs() } else { w.clone() })
        .max()
        .unwrap_or_else(zero)
}

/// `(H*, w)` is `eps`-balanced, `H` being the first `base` vertices.
pub fn is_eps_balanced(wf: &WeightFunction, base: usize, eps: &Rational) -> bool {
    &balance_deviation(wf, base) <= eps
}

/// A half of a weighted graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Half {
    weighting: Arc<WeightFunction>,
    s: Vec<Rational>,
}

impl Half {
    pub fn new(weighting: Arc<WeightFunction>, s: Vec<Rational>) -> Result<Self> {
        let n = weighting.graph().n();
        if s.len() != n {
            return Err(Error::InvalidHalf(format!("{} values for {n} vertices", s.len())));
        }
        for (v, x) in s.iter().enumerate() {
            if x.is_negative() {
                return Err(Error::InvalidHalf(format!("s({v}) = {x} is negative")));
            }
            if x > weighting.weight(v) {
                return Err(Error::InvalidHalf(format!("s({v}) = {x} exceeds w({v}) = {}", weighting.weight(v))));
            }
        }
        let total: Rational = s.iter().sum();
        if total != half() {
            return Err(Error::InvalidHalf(format!("values sum to {total}, not 1/2")));
        }
        Ok(Half { weighting, s })
    }

    pub fn weighting(&self) -> &WeightFunction {
        &self.weighting
    }

    pub fn weighting_arc(&self) -> &Arc<WeightFunction> {
        &self.weighting
    }

    pub fn graph(&self) -> &Graph {
        self.weighting.graph()
    }

    pub fn values(&self) -> &[Rational] {
        &self.s
    }

    pub fn value(&self, v: usize) -> &Rational {
        &self.s[v]
    }

    pub fn support(&self) -> VertexSet {
        VertexSet::new((0..self.s.len()).filter(|&v| !self.s[v].is_zero()))
    }

    /// `s(u) s(v)` for the pair `uv`.
    pub fn edge_value(&self, u: usize, v: usize) -> Rational {
        &self.s[u] * &self.s[v]
    }
}

pub fn edge_mass(h: &Half) -> Rational {
    edge_mass_of(h.graph(), &h.s)
}

fn edge_mass_of(g: &Graph, s: &[Rational]) -> Rational {
    g.edges().filter(|&(u, v)| !s[u].is_zero() && !s[v].is_zero()).map(|(u, v)| &s[u] * &s[v]).sum()
}

/// `edge_mass(h) <= 1/50`, compared exactly.
pub fn is_sparse_half(h: &Half) -> bool {
    edge_mass(h) <= fiftieth()
}

/// Sequence of edge masses seen while rounding a half, plus the final set.
#[derive(Clone, Debug)]
pub struct RoundingTrace {
    pub set: VertexSet,
    /// Edge mass before the first transfer and after every transfer.
    pub masses: Vec<Rational>,
}

/// Turns a sparse half of a uniformly weighted graph into a vertex set of
/// size `floor(n/2)` spanning at most `n^2/50` edges.
pub fn round_half_to_set(h: &Half) -> Result<VertexSet> {
    round_half_traced(h).map(|t| t.set)
}

/// [`round_half_to_set`] keeping the edge mass after every transfer.
///
/// While two vertices carry a fractional value strictly between `0` and
/// `1/n`, mass moves from the one whose neighborhood carries more `s`-mass to
/// the other (toward the lower index on ties), by as much as keeps both in
/// range. Every such move leaves at least one of them integral and never
/// increases the edge mass.
pub fn round_half_traced(h: &Half) -> Result<RoundingTrace> {
    let wf = h.weighting();
    if !wf.is_uniform() {
        return Err(Error::InvalidHalf("rounding needs uniform weights".into()));
    }
    let g = wf.graph();
    let n = g.n();
    let unit = rat(1, n as i64);
    let mut s = h.s.clone();
    let mut mass = edge_mass_of(g, &s);
    if mass > fiftieth() {
        return Err(Error::InvalidHalf(format!("edge mass {mass} exceeds 1/50")));
    }
    let mut masses = vec![mass.clone()];
    let nbhd_mass = |s: &[Rational], v: usize| -> Rational { g.neighbors(v).iter().map(|&x| &s[x]).sum() };
    loop {
        let mut frac = (0..n).filter(|&v| !s[v].is_zero() && s[v] != unit);
        let (Some(u), Some(v)) = (frac.next(), frac.next()) else { break };
        let (nu, nv) = (nbhd_mass(&s, u), nbhd_mass(&s, v));
        // u < v, so on a tie the receiver is u.
        let (donor, receiver) = if nv >= nu { (v, u) } else { (u, v) };
        let room = &unit - &s[receiver];
        let delta = if s[donor] < room { s[donor].clone() } else { room };
        s[donor] -= &delta;
        s[receiver] += &delta;
        let next = edge_mass_of(g, &s);
        if next > mass {
            return Err(Error::TheoremViolation(format!(
                "mass transfer {donor}->{receiver} raised edge mass from {mass} to {next}"
            )));
        }
        mass = next;
        masses.push(mass.clone());
    }
    let set = VertexSet::new((0..n).filter(|&v| s[v] == unit));
    if set.len() != n / 2 {
        return Err(Error::TheoremViolation(format!(
            "rounding produced {} full vertices, expected {}",
            set.len(),
            n / 2
        )));
    }
    Ok(RoundingTrace { set, masses })
}

/// The half of `(G, 1/n)` that is `1/n` on `set`; needs `|set| = n/2`.
pub fn indicator_half(weighting: Arc<WeightFunction>, set: &VertexSet) -> Result<Half> {
    let n = weighting.graph().n();
    set.check_range(n)?;
    let unit = rat(1, n as i64);
    let s = (0..n).map(|v| if set.contains(v) { unit.clone() } else { zero() }).collect();
    Half::new(weighting, s)
}

/// Weight of each target vertex is the weight of its fiber.
pub fn pushforward(wf: &WeightFunction, phi: &Homomorphism) -> Result<WeightFunction> {
    if phi.source() != wf.graph() {
        return Err(Error::invalid("homomorphism source differs from the weighted graph"));
    }
    if let Some((u, v)) = phi.first_unpreserved_edge() {
        return Err(Error::invalid(format!("edge ({u},{v}) is not preserved")));
    }
    let mut w = vec![zero(); phi.target().n()];
    for (v, &t) in phi.map().iter().enumerate() {
        w[t] += wf.weight(v);
    }
    WeightFunction::new(phi.target_arc().clone(), w)
}

/// Lifts a half of `(H, w_phi)` to `(G, w)` by splitting each target value
/// across its fiber in proportion to `w`.
pub fn lift_half(sh: &Half, phi: &Homomorphism, wf: &Arc<WeightFunction>) -> Result<Half> {
    let pushed = pushforward(wf, phi)?;
    if &pushed != sh.weighting() {
        return Err(Error::invalid("half is not over the pushforward weighting"));
    }
    let s = phi
        .map()
        .iter()
        .enumerate()
        .map(|(v, &t)| {
            let st = sh.value(t);
            if st.is_zero() {
                return Ok(zero());
            }
            let fiber = pushed.weight(t);
            if fiber.is_zero() {
                return Err(Error::DegenerateFiber(t));
            }
            Ok(wf.weight(v) / fiber * st)
        })
        .collect::<Result<Vec<_>>>()?;
    Half::new(wf.clone(), s)
}

/// A finite probability distribution over halves of one weighted graph.
#[derive(Clone, Debug)]
pub struct HalfDistribution {
    entries: Vec<(Half, Rational)>,
}

impl HalfDistribution {
    pub fn new(entries: Vec<(Half, Rational)>) -> Result<Self> {
        let Some((first, _)) = entries.first() else {
            return Err(Error::invalid("empty distribution"));
        };
        if entries.iter().any(|(_, p)| p.is_negative()) {
            return Err(Error::invalid("negative probability"));
        }
        let total: Rational = entries.iter().map(|(_, p)| p).sum();
        if total != one() {
            return Err(Error::invalid(format!("probabilities sum to {total}")));
        }
        let w = first.weighting();
        if entries.iter().any(|(h, _)| h.weighting() != w) {
            return Err(Error::invalid("halves over different weighted graphs"));
        }
        Ok(HalfDistribution { entries })
    }

    /// Equal probability on every half.
    pub fn uniform(halves: Vec<Half>) -> Result<Self> {
        let p = rat(1, halves.len().max(1) as i64);
        HalfDistribution::new(halves.into_iter().map(|h| (h, p.clone())).collect())
    }

    pub fn entries(&self) -> &[(Half, Rational)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn weighting(&self) -> &WeightFunction {
        self.entries[0].0.weighting()
    }

    /// `E[s(u) s(v)]`.
    pub fn expected_edge_value(&self, u: usize, v: usize) -> Rational {
        self.entries.iter().map(|(h, p)| p * h.edge_value(u, v)).sum()
    }
}

pub fn expected_edge_mass(dist: &HalfDistribution) -> Rational {
    dist.entries.iter().map(|(h, p)| p * edge_mass(h)).sum()
}

/// Minimum over edges of `E[s(e)] / w(e)`, skipping edges of zero weight.
/// `None` when no edge has positive weight.
pub fn uniformity_constant(dist: &HalfDistribution) -> Option<Rational> {
    let wf = dist.weighting();
    wf.graph()
        .edges()
        .filter_map(|(u, v)| {
            let we = wf.edge_weight(u, v);
            (!we.is_zero()).then(|| dist.expected_edge_value(u, v) / we)
        })
        .min()
}

/// Exact evidence that a distribution is a `c`-uniform sparse half.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniformityCertificate {
    pub c: Rational,
    pub expected_edge_mass: Rational,
    pub uniformity_constant: Option<Rational>,
    pub passes: bool,
}

pub fn certify(dist: &HalfDistribution, c: &Rational) -> UniformityCertificate {
    let expected = expected_edge_mass(dist);
    let uc = uniformity_constant(dist);
    let passes = expected <= fiftieth() && uc.as_ref().is_none_or(|u| u >= c);
    UniformityCertificate { c: c.clone(), expected_edge_mass: expected, uniformity_constant: uc, passes }
}

/// `e(G[S]) / n^2`, the edge mass of the indicator half of `S` under uniform
/// weights.
pub fn scaled_edge_count(g: &Graph, s: &VertexSet) -> Rational {
    let n = g.n() as i64;
    int(crate::graph::induced_edge_count(g, s) as i64) / int(n * n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fd::{make_fd, make_petersen};
    use crate::graph::induced_edge_count;
    use crate::graph::{blowup, generators::complete};

    fn wf_of(g: Graph, w: &[(i64, i64)]) -> Arc<WeightFunction> {
        Arc::new(WeightFunction::new(g, w.iter().map(|&(p, q)| rat(p, q)).collect()).unwrap())
    }

    fn c5_uniform() -> Arc<WeightFunction> {
        Arc::new(WeightFunction::uniform(make_fd(2).unwrap()).unwrap())
    }

    /// `s_i` on C5: `w` on `v_i, v_{i+1}`, the remainder on `v_{i+2}`.
    fn c5_half(wf: &Arc<WeightFunction>, i: usize) -> Half {
        let mut s = vec![zero(); 5];
        s[i] = wf.weight(i).clone();
        s[(i + 1) % 5] = wf.weight((i + 1) % 5).clone();
        s[(i + 2) % 5] = half() - wf.weight(i) - wf.weight((i + 1) % 5);
        Half::new(wf.clone(), s).unwrap()
    }

    #[test]
    fn weight_function_invariants() {
        let g = complete(2);
        assert!(WeightFunction::new(g.clone(), vec![rat(1, 2), rat(1, 3)]).is_err());
        assert!(WeightFunction::new(g.clone(), vec![rat(3, 2), rat(-1, 2)]).is_err());
        assert!(WeightFunction::new(g.clone(), vec![one()]).is_err());
        assert!(WeightFunction::new(g, vec![one(), zero()]).is_ok());
    }

    #[test]
    fn half_invariants() {
        let wf = c5_uniform();
        assert!(Half::new(wf.clone(), vec![rat(1, 5), rat(1, 5), rat(1, 5), zero(), zero()]).is_err());
        assert!(Half::new(wf.clone(), vec![rat(1, 4), rat(1, 4), zero(), zero(), zero()]).is_err());
        assert!(Half::new(wf, vec![rat(1, 5), rat(1, 5), rat(1, 10), zero(), zero()]).is_ok());
    }

    #[test]
    fn edge_mass_examples() {
        let wf = Arc::new(WeightFunction::uniform(make_fd(5).unwrap()).unwrap());
        let s = (0..14).map(|v| if v < 7 { rat(1, 14) } else { zero() }).collect();
        let h = Half::new(wf, s).unwrap();
        assert_eq!(edge_mass(&h), rat(3, 196));
        assert!(is_sparse_half(&h));

        let wf = c5_uniform();
        let s1 = c5_half(&wf, 0);
        assert_eq!(edge_mass(&s1), rat(1, 50));
        assert!(is_sparse_half(&s1));

        // v1 ~ v3 in the circulant labelling, so putting full weight on both
        // costs 1/25 on that edge alone.
        let s = vec![rat(1, 5), zero(), rat(1, 5), zero(), rat(1, 10)];
        let bad = Half::new(wf.clone(), s).unwrap();
        assert!(edge_mass(&bad) >= rat(1, 25));
        assert!(!is_sparse_half(&bad));

        // Support on an independent set.
        let s = vec![rat(1, 4), rat(1, 4), zero(), zero(), zero()];
        let wf2 = wf_of(make_fd(2).unwrap(), &[(3, 10), (3, 10), (1, 10), (1, 10), (2, 10)]);
        let h = Half::new(wf2, s).unwrap();
        assert_eq!(edge_mass(&h), zero());
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(weighted_min_degree(&c5_uniform()), rat(2, 5));
        let f5 = WeightFunction::uniform(make_fd(5).unwrap()).unwrap();
        assert_eq!(weighted_min_degree(&f5), rat(5, 14));
        let k2 = wf_of(complete(2), &[(1, 3), (2, 3)]);
        assert_eq!(weighted_min_degree(&k2), rat(1, 3));
    }

    #[test]
    fn rounding_keeps_tight_petersen_set() {
        let p = make_petersen();
        let wf = Arc::new(WeightFunction::uniform(p.clone()).unwrap());
        let set = VertexSet::new([0, 2, 3, 6, 9]);
        let h = indicator_half(wf, &set).unwrap();
        let out = round_half_to_set(&h).unwrap();
        assert_eq!(out, set);
        assert_eq!(induced_edge_count(&p, &out), 2);
    }

    #[test]
    fn rounding_lifted_c5_half() {
        let c5 = make_fd(2).unwrap();
        let (g, part) = blowup(&c5, &[2; 5]).unwrap();
        let phi = Homomorphism::new(g.clone(), c5, part.assignment().to_vec()).unwrap();
        let wf = Arc::new(WeightFunction::uniform(g.clone()).unwrap());
        let pushed = Arc::new(pushforward(&wf, &phi).unwrap());
        let lifted = lift_half(&c5_half(&pushed, 0), &phi, &wf).unwrap();
        assert_eq!(edge_mass(&lifted), rat(1, 50));
        let trace = round_half_traced(&lifted).unwrap();
        assert_eq!(trace.set.len(), 5);
        assert!(induced_edge_count(&g, &trace.set) <= 2);
        assert!(trace.masses.windows(2).all(|w| w[1] <= w[0]));
    }

    #[test]
    fn rounding_rejects_non_sparse_or_non_uniform() {
        let wf = c5_uniform();
        let bad = Half::new(wf, vec![rat(1, 5), zero(), rat(1, 5), zero(), rat(1, 10)]).unwrap();
        assert!(matches!(round_half_to_set(&bad), Err(Error::InvalidHalf(_))));
        let k2 = wf_of(complete(2), &[(1, 3), (2, 3)]);
        let h = Half::new(k2, vec![zero(), rat(1, 2)]).unwrap();
        assert!(matches!(round_half_to_set(&h), Err(Error::InvalidHalf(_))));
    }

    #[test]
    fn rounding_odd_n() {
        let g = make_fd(2).unwrap();
        let wf = c5_uniform();
        let h = c5_half(&wf, 2);
        let s = round_half_to_set(&h).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(induced_edge_count(&g, &s), 0);
    }

    #[test]
    fn pushforward_examples() {
        let c5 = make_fd(2).unwrap();
        let (g, part) = blowup(&c5, &[1, 2, 2, 2, 3]).unwrap();
        let phi = Homomorphism::new(g.clone(), c5.clone(), part.assignment().to_vec()).unwrap();
        let wf = WeightFunction::uniform(g).unwrap();
        let pushed = pushforward(&wf, &phi).unwrap();
        let want: Vec<Rational> = [1, 2, 2, 2, 3].iter().map(|&k| rat(k, 10)).collect();
        assert_eq!(pushed.weights(), &want[..]);

        let id = Homomorphism::identity(c5.clone());
        let u = WeightFunction::uniform(c5).unwrap();
        assert_eq!(pushforward(&u, &id).unwrap(), u);
    }

    #[test]
    fn lift_through_identity_is_identity() {
        let c5 = make_fd(2).unwrap();
        let wf = c5_uniform();
        let id = Homomorphism::identity(c5);
        let h = c5_half(&wf, 3);
        assert_eq!(lift_half(&h, &id, &wf).unwrap().values(), h.values());
    }

    #[test]
    fn lift_of_f5_half_through_blowup() {
        let f5 = make_fd(5).unwrap();
        let (g, part) = blowup(&f5, &[2; 14]).unwrap();
        let phi = Homomorphism::new(g.clone(), f5, part.assignment().to_vec()).unwrap();
        let wf = Arc::new(WeightFunction::uniform(g).unwrap());
        let pushed = Arc::new(pushforward(&wf, &phi).unwrap());
        let s = (0..14).map(|v| if v < 7 { rat(1, 14) } else { zero() }).collect();
        let sh = Half::new(pushed, s).unwrap();
        let lifted = lift_half(&sh, &phi, &wf).unwrap();
        assert!(edge_mass(&lifted) <= rat(3, 196));
    }

    #[test]
    fn c5_distribution_constants() {
        let wf = c5_uniform();
        let dist = HalfDistribution::uniform((0..5).map(|i| c5_half(&wf, i)).collect()).unwrap();
        assert_eq!(expected_edge_mass(&dist), rat(1, 50));
        assert_eq!(uniformity_constant(&dist), Some(rat(1, 10)));
        for (u, v) in wf.graph().edges() {
            assert_eq!(dist.expected_edge_value(u, v), rat(1, 250));
        }
        let cert = certify(&dist, &rat(1, 30));
        assert!(cert.passes);
    }

    #[test]
    fn single_half_on_independent_set() {
        let wf = wf_of(make_fd(2).unwrap(), &[(3, 10), (3, 10), (1, 10), (1, 10), (2, 10)]);
        let h = Half::new(wf, vec![rat(1, 4), rat(1, 4), zero(), zero(), zero()]).unwrap();
        let dist = HalfDistribution::uniform(vec![h]).unwrap();
        assert_eq!(expected_edge_mass(&dist), zero());
        assert_eq!(uniformity_constant(&dist), Some(zero()));
    }

    #[test]
    fn distribution_rejects_bad_probabilities() {
        let wf = c5_uniform();
        let h = c5_half(&wf, 0);
        assert!(HalfDistribution::new(vec![(h.clone(), rat(1, 2))]).is_err());
        assert!(HalfDistribution::new(vec![(h.clone(), rat(3, 2)), (h, rat(-1, 2))]).is_err());
        assert!(HalfDistribution::new(vec![]).is_err());
    }
}
