//! Exhaustive ground truth for small graphs.
//!
//! [`min_half_edges`] is an exact branch and bound over vertex subsets held in
//! `u64` masks. Vertices are decided in index order, include first, so the
//! first optimum reached is the lexicographically first one; pruning against
//! a branch's own incumbent uses `>=` to keep that property.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_triangle_free, Graph, VertexSet};
use crate::rational::{half, rat, serde_str, zero, Rational};
use crate::weighted::{edge_mass, Half, WeightFunction};

/// Largest graph the oracle accepts.
pub const ORACLE_GUARD: usize = 40;

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    k: usize,
    shared: &'a AtomicUsize,
}

struct Incumbent {
    count: usize,
    set: Option<u64>,
}

impl Search<'_> {
    /// Lower bound on the edges of any completion of `chosen` by `r` vertices
    /// of `cand`. A candidate `v` brings its edges into `chosen`, plus at
    /// least half of the neighbors it is forced to have among the other
    /// `r - 1` picks.
    fn bound(&self, chosen: u64, cand: u64, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        let size = cand.count_ones() as usize;
        let mut costs: Vec<usize> = Vec::with_capacity(size);
        let mut c = cand;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            let into = (self.adj[v] & chosen).count_ones() as usize;
            let non_nbrs = size - 1 - (self.adj[v] & cand).count_ones() as usize;
            let forced = (r - 1).saturating_sub(non_nbrs);
            // Doubled to stay integral.
            costs.push(2 * into + forced);
        }
        costs.sort_unstable();
        costs[..r].iter().sum::<usize>().div_ceil(2)
    }

    fn dfs(&self, v: usize, chosen: u64, size: usize, edges: usize, best: &mut Incumbent) {
        if size == self.k {
            if best.set.is_none() || edges < best.count {
                best.count = edges;
                best.set = Some(chosen);
                self.shared.fetch_min(edges, Ordering::Relaxed);
            }
            return;
        }
        let r = self.k - size;
        if self.n - v < r {
            return;
        }
        let cand = if v >= 64 { 0 } else { !0u64 << v } & mask(self.n);
        let lb = edges + self.bound(chosen, cand, r);
        if best.set.is_some() && lb >= best.count {
            return;
        }
        if lb > best.count.min(self.shared.load(Ordering::Relaxed)) {
            return;
        }
        let added = (self.adj[v] & chosen).count_ones() as usize;
        self.dfs(v + 1, chosen | (1 << v), size + 1, edges + added, best);
        self.dfs(v + 1, chosen, size, edges, best);
    }
}

fn mask(n: usize) -> u64 {
    if n == 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

fn adjacency(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | (1 << u))).collect()
}

/// Edges of `G[S]` for `S` built by repeatedly dropping a vertex of largest
/// degree within the remaining set.
fn greedy_upper_bound(adj: &[u64], n: usize, k: usize) -> usize {
    let mut keep = mask(n);
    while keep.count_ones() as usize > k {
        let v = (0..n)
            .filter(|&v| keep >> v & 1 == 1)
            .max_by_key(|&v| ((adj[v] & keep).count_ones(), std::cmp::Reverse(v)))
            .expect("non-empty");
        keep &= !(1 << v);
    }
    (0..n).filter(|&v| keep >> v & 1 == 1).map(|v| (adj[v] & keep).count_ones() as usize).sum::<usize>() / 2
}

/// Minimum of `e(G[S])` over `|S| = floor(n/2)`, with the lexicographically
/// first optimal set.
pub fn min_half_edges(g: &Graph) -> Result<(VertexSet, usize)> {
    let n = g.n();
    if n > ORACLE_GUARD {
        return Err(Error::ResourceLimit(format!("oracle supports n <= {ORACLE_GUARD}, got {n}")));
    }
    let k = n / 2;
    if k == 0 {
        return Ok((VertexSet::new([]), 0));
    }
    let adj = adjacency(g);
    let shared = AtomicUsize::new(greedy_upper_bound(&adj, n, k));
    let search = Search { adj: &adj, n, k, shared: &shared };
    // Branch `first` holds the sets whose smallest member is `first`; these
    // are lexicographically ordered by `first`.
    let results: Vec<Option<(usize, u64)>> = (0..=n - k)
        .into_par_iter()
        .map(|first| {
            let mut best = Incumbent { count: usize::MAX, set: None };
            search.dfs(first + 1, 1 << first, 1, 0, &mut best);
            best.set.map(|s| (best.count, s))
        })
        .collect();
    let (count, set) = results
        .into_iter()
        .flatten()
        .min_by_key(|&(c, _)| c)
        .ok_or_else(|| Error::TheoremViolation("branch and bound found no set".into()))?;
    Ok((VertexSet::new((0..n).filter(|&v| set >> v & 1 == 1)), count))
}

/// Oracle result together with the conjectured bound.
#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub n: usize,
    pub min_edges: usize,
    #[serde(with = "serde_str")]
    pub bound: Rational,
    /// `50 min_edges <= n^2`.
    pub holds: bool,
    /// `50 min_edges = n^2`.
    pub tight: bool,
    pub witness: VertexSet,
}

/// [`min_half_edges`] on a triangle-free graph, compared with `n^2/50`.
pub fn oracle_report(g: &Graph) -> Result<OracleReport> {
    if !is_triangle_free(g) {
        return Err(Error::PreconditionViolation("graph is not triangle-free".into()));
    }
    let (witness, min_edges) = min_half_edges(g)?;
    let n = g.n();
    Ok(OracleReport {
        n,
        min_edges,
        bound: rat((n * n) as i64, 50),
        holds: 50 * min_edges <= n * n,
        tight: 50 * min_edges == n * n,
        witness,
    })
}

/// Whether some `floor(n/2)` vertices span at most `n^2/50` edges.
pub fn conjecture_check(g: &Graph) -> Result<bool> {
    oracle_report(g).map(|r| r.holds)
}

/// `t (N(v) - N(u)) - [uv in E] t^2` is the change from moving `t` from `u`
/// to `v`, where `N(x)` is the `s`-mass of the neighborhood of `x`.
fn best_transfer(g: &Graph, w: &[Rational], s: &[Rational]) -> Option<(usize, usize, Rational)> {
    let n = s.len();
    let nb: Vec<Rational> = (0..n).map(|x| g.neighbors(x).iter().map(|&y| &s[y]).sum()).collect();
    let mut best: Option<(usize, usize, Rational, Rational)> = None;
    for u in 0..n {
        if s[u] == zero() {
            continue;
        }
        for v in 0..n {
            if v == u || s[v] >= w[v] {
                continue;
            }
            let room = &w[v] - &s[v];
            let t = if s[u] < room { s[u].clone() } else { room };
            let mut change = &t * (&nb[v] - &nb[u]);
            if g.has_edge(u, v) {
                change -= &t * &t;
            }
            if change < zero() && best.as_ref().is_none_or(|b| change < b.3) {
                best = Some((u, v, t, change));
            }
        }
    }
    best.map(|(u, v, t, _)| (u, v, t))
}

fn descend(wf: &Arc<WeightFunction>, mut s: Vec<Rational>) -> Result<Half> {
    let g = wf.graph();
    let cap = 20 * g.n() * g.n() + 20;
    for _ in 0..cap {
        match best_transfer(g, wf.weights(), &s) {
            Some((u, v, t)) => {
                s[u] -= &t;
                s[v] += &t;
            }
            None => break,
        }
    }
    Half::new(wf.clone(), s)
}

/// Average of `w/2` and the half obtained by filling vertices greedily in a
/// random order.
fn random_start(wf: &WeightFunction, rng: &mut ChaCha8Rng) -> Vec<Rational> {
    let n = wf.graph().n();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut left = half();
    let mut extreme = vec![zero(); n];
    for v in order {
        let take = if wf.weight(v) < &left { wf.weight(v).clone() } else { left.clone() };
        left -= &take;
        extreme[v] = take;
    }
    (0..n).map(|v| (&extreme[v] + wf.weight(v) * half()) * half()).collect()
}

/// Local search over halves by exact pairwise mass transfers; the result
/// admits no single improving transfer. Restart `0` starts from `w/2`, the
/// others from seeded random halves; the lowest edge mass wins, earliest
/// restart on ties.
pub fn fractional_descent(wg: &Arc<WeightFunction>, restarts: usize, seed: u64) -> Result<Half> {
    let runs = restarts.max(1);
    let halves: Vec<Half> = (0..runs)
        .into_par_iter()
        .map(|r| {
            let start = if r == 0 {
                wg.weights().iter().map(|x| x * half()).collect()
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(r as u64);
                random_start(wg, &mut rng)
            };
            descend(wg, start)
        })
        .collect::<Result<_>>()?;
    let masses: Vec<Rational> = halves.iter().map(edge_mass).collect();
    let best = (0..runs).min_by(|&a, &b| masses[a].cmp(&masses[b]).then(a.cmp(&b))).expect("one run");
    Ok(halves.into_iter().nth(best).expect("index in range"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fd::{make_fd, make_petersen};
    use crate::graph::{blowup, induced_edge_count};
    use crate::rational::fiftieth;
    use crate::weighted::round_half_traced;

    fn brute(g: &Graph) -> (Vec<usize>, usize) {
        let n = g.n();
        let k = n / 2;
        let mut best: Option<(Vec<usize>, usize)> = None;
        for m in 0u32..(1 << n) {
            if m.count_ones() as usize != k {
                continue;
            }
            let s: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
            let e = induced_edge_count(g, &VertexSet::new(s.clone()));
            let better = match &best {
                None => true,
                Some((bs, be)) => e < *be || (e == *be && s < *bs),
            };
            if better {
                best = Some((s, e));
            }
        }
        best.unwrap()
    }

    #[test]
    fn spec_examples() {
        let p = make_petersen();
        let (s, c) = min_half_edges(&p).unwrap();
        assert_eq!(c, 2);
        assert_eq!(induced_edge_count(&p, &s), 2);
        assert_eq!(min_half_edges(&make_fd(2).unwrap()).unwrap().1, 0);
        let (b, _) = blowup(&make_fd(2).unwrap(), &[4; 5]).unwrap();
        assert!(oracle_report(&b).unwrap().tight);
        let (pb, _) = blowup(&p, &[2; 10]).unwrap();
        let r = oracle_report(&pb).unwrap();
        assert_eq!((r.min_edges, r.tight), (8, true));
    }

    #[test]
    fn matches_brute_force_with_lex_tie_break() {
        let graphs = [
            make_petersen(),
            make_fd(3).unwrap(),
            make_fd(4).unwrap(),
            blowup(&make_fd(2).unwrap(), &[1, 2, 3, 2, 1]).unwrap().0,
            blowup(&make_fd(3).unwrap(), &[2, 1, 1, 2, 1, 1, 2, 1]).unwrap().0,
        ];
        for g in graphs {
            let (bs, be) = brute(&g);
            let (s, c) = min_half_edges(&g).unwrap();
            assert_eq!(c, be);
            assert_eq!(s.members(), &bs[..]);
        }
    }

    #[test]
    fn bipartite_graphs_hold() {
        let g = Graph::new(9, (0..4).flat_map(|u| (4..9).map(move |v| (u, v)))).unwrap();
        assert_eq!(min_half_edges(&g).unwrap().1, 0);
        assert!(conjecture_check(&g).unwrap());
    }

    #[test]
    fn guards() {
        assert!(matches!(min_half_edges(&Graph::empty(41)), Err(Error::ResourceLimit(_))));
        let tri = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(oracle_report(&tri), Err(Error::PreconditionViolation(_))));
    }

    #[test]
    fn relabeling_invariance() {
        let (g, _) = blowup(&make_fd(3).unwrap(), &[2, 2, 1, 2, 2, 1, 2, 2]).unwrap();
        let base = min_half_edges(&g).unwrap().1;
        let n = g.n();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..5 {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            assert_eq!(min_half_edges(&g.relabel(&perm).unwrap()).unwrap().1, base);
        }
    }

    #[test]
    fn descent_examples() {
        for g in [make_fd(2).unwrap(), make_petersen()] {
            let wf = Arc::new(WeightFunction::uniform(g).unwrap());
            let h = fractional_descent(&wf, 8, 1).unwrap();
            assert!(edge_mass(&h) <= fiftieth());
            let trace = round_half_traced(&h).unwrap();
            assert!(trace.masses.windows(2).all(|w| w[1] <= w[0]));
        }
        // Half the weight on one independent set.
        let g = make_fd(2).unwrap();
        let w = vec![rat(1, 4), rat(1, 8), rat(1, 4), rat(1, 4), rat(1, 8)];
        let wf = Arc::new(WeightFunction::new(g, w).unwrap());
        assert_eq!(edge_mass(&fractional_descent(&wf, 4, 5).unwrap()), zero());
    }
}
