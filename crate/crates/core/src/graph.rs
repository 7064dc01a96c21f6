//! Simple undirected graphs on dense vertex labels `0..n`, together with the
//! structural predicates, generators and counting primitives the rest of the
//! crate is built on.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

/// Largest vertex count accepted by exact independent-set enumeration.
pub const MIS_GUARD: usize = 64;

/// An immutable simple graph. Vertices are `0..n`; neighbor lists are sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Builds a graph from an edge list. Self-loops, out-of-range endpoints and
    /// repeated edges are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::invalid(format!("parallel edge at vertex {v}")));
            }
        }
        Ok(Graph { n, m, adj })
    }

    /// Builds a graph from an edge list, silently merging duplicates.
    pub(crate) fn from_edges_dedup(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            debug_assert!(u != v && u < n && v < n);
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m2 = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            m2 += list.len();
        }
        Graph { n, m: m2 / 2, adj }
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, m: 0, adj: vec![Vec::new(); n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| ((u + 1)..self.n).filter(move |&v| !self.has_edge(u, v)).map(move |v| (u, v)))
    }

    /// Neighborhood bitmasks; only valid for `n <= 64`.
    pub(crate) fn masks(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        self.adj.iter().map(|list| list.iter().fold(0u64, |acc, &v| acc | (1u64 << v))).collect()
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::invalid("permutation length differs from vertex count"));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::invalid("not a permutation"));
            }
        }
        Graph::new(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Subgraph induced on `keep`, relabelled to `0..keep.len()` in order.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]));
        Graph::from_edges_dedup(keep.len(), edges)
    }

    /// Same vertex set with every edge touching `removed` deleted.
    pub fn without_vertices(&self, removed: &VertexSet) -> Graph {
        let edges = self.edges().filter(|&(u, v)| !removed.contains(u) && !removed.contains(v));
        Graph::from_edges_dedup(self.n, edges)
    }
}

/// A sorted set of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub(crate) fn from_mask(mask: u64) -> Self {
        VertexSet((0..64).filter(|&i| mask >> i & 1 == 1).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.iter().any(|v| other.contains(v))
    }

    /// Fails if any member is outside `0..n`.
    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::invalid(format!("vertex {v} out of range for n={n}"))),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

/// An ordered partition of `0..n`; block `i` corresponds to template vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    blocks: Vec<VertexSet>,
    #[serde(skip)]
    owner: Vec<usize>,
}

impl Partition {
    pub fn new(n: usize, blocks: Vec<VertexSet>) -> Result<Self> {
        let mut owner = vec![usize::MAX; n];
        for (i, b) in blocks.iter().enumerate() {
            b.check_range(n)?;
            for v in b.iter() {
                if owner[v] != usize::MAX {
                    return Err(Error::invalid(format!("vertex {v} lies in two blocks")));
                }
                owner[v] = i;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::invalid(format!("vertex {v} is in no block")));
        }
        Ok(Partition { blocks, owner })
    }

    /// Partition with block `i` = `{v : assignment[v] == i}` for `i < k`.
    pub fn from_assignment(assignment: &[usize], k: usize) -> Result<Self> {
        let mut blocks = vec![Vec::new(); k];
        for (v, &b) in assignment.iter().enumerate() {
            if b >= k {
                return Err(Error::invalid(format!("block index {b} out of range for k={k}")));
            }
            blocks[b].push(v);
        }
        Partition::new(assignment.len(), blocks.into_iter().map(VertexSet::new).collect())
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn n(&self) -> usize {
        self.owner.len()
    }

    /// Index of the block containing `v`.
    pub fn block_of(&self, v: usize) -> usize {
        self.owner[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.owner
    }
}

pub fn is_triangle_free(g: &Graph) -> bool {
    g.edges().all(|(u, v)| !sorted_intersects(g.neighbors(u), g.neighbors(v)))
}

/// Some triangle `(a, b, c)` with `a < b < c`, if one exists.
pub fn find_triangle(g: &Graph) -> Option<(usize, usize, usize)> {
    g.edges().find_map(|(u, v)| {
        g.neighbors(u).iter().find(|&&w| g.has_edge(v, w)).map(|&w| {
            let mut t = [u, v, w];
            t.sort_unstable();
            (t[0], t[1], t[2])
        })
    })
}

fn sorted_intersects(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

fn sorted_intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

pub fn common_neighbors(g: &Graph, u: usize, v: usize) -> Result<VertexSet> {
    if u == v {
        return Err(Error::invalid("common_neighbors needs two distinct vertices"));
    }
    if u >= g.n() || v >= g.n() {
        return Err(Error::invalid("vertex out of range"));
    }
    Ok(VertexSet(sorted_intersection(g.neighbors(u), g.neighbors(v))))
}

/// Whether every non-edge closes a triangle, and the smallest common-neighbor
/// count over non-edges divided by `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalityClass {
    pub is_maximal: bool,
    /// `None` stands for +infinity: the graph has no non-edges.
    pub c_star: Option<Rational>,
}

pub fn maximality_class(g: &Graph) -> Result<MaximalityClass> {
    if let Some(t) = find_triangle(g) {
        return Err(Error::PreconditionViolation(format!("graph contains triangle {t:?}")));
    }
    let min = g.non_edges().map(|(u, v)| sorted_intersection(g.neighbors(u), g.neighbors(v)).len()).min();
    Ok(match min {
        None => MaximalityClass { is_maximal: true, c_star: None },
        Some(c) => MaximalityClass { is_maximal: c > 0, c_star: Some(rat(c as i64, g.n() as i64)) },
    })
}

/// Replaces vertex `i` of `h` by an independent set of `sizes[i]` vertices and
/// every edge by a complete bipartite graph. Block `i` occupies a contiguous
/// index range, blocks in template order.
pub fn blowup(h: &Graph, sizes: &[usize]) -> Result<(Graph, Partition)> {
    if sizes.is_empty() {
        return Err(Error::invalid("blowup needs a non-empty size list"));
    }
    if sizes.len() != h.n() {
        return Err(Error::invalid(format!("{} sizes given for a template on {} vertices", sizes.len(), h.n())));
    }
    if let Some(i) = sizes.iter().position(|&s| s == 0) {
        return Err(Error::invalid(format!("part {i} has size zero")));
    }
    let mut offsets = Vec::with_capacity(sizes.len() + 1);
    offsets.push(0);
    for s in sizes {
        offsets.push(offsets.last().unwrap() + s);
    }
    let n = *offsets.last().unwrap();
    let mut edges = Vec::new();
    for (a, b) in h.edges() {
        for u in offsets[a]..offsets[a + 1] {
            for v in offsets[b]..offsets[b + 1] {
                edges.push((u, v));
            }
        }
    }
    let blocks = (0..sizes.len()).map(|i| VertexSet::new(offsets[i]..offsets[i + 1])).collect();
    Ok((Graph::new(n, edges)?, Partition::new(n, blocks)?))
}

/// Result of [`perturb`].
#[derive(Clone, Debug)]
pub struct Perturbed {
    pub graph: Graph,
    pub triangle_free: bool,
}

pub fn perturb(g: &Graph, add: &[(usize, usize)], remove: &[(usize, usize)]) -> Result<Perturbed> {
    let norm = |&(u, v): &(usize, usize)| if u < v { (u, v) } else { (v, u) };
    let add: Vec<_> = add.iter().map(norm).collect();
    let remove: Vec<_> = remove.iter().map(norm).collect();
    if let Some(e) = add.iter().find(|e| remove.contains(e)) {
        return Err(Error::invalid(format!("edge {e:?} is both added and removed")));
    }
    for &(u, v) in &add {
        if u == v || v >= g.n() {
            return Err(Error::invalid(format!("cannot add ({u},{v})")));
        }
        if g.has_edge(u, v) {
            return Err(Error::invalid(format!("edge ({u},{v}) already present")));
        }
    }
    for &(u, v) in &remove {
        if !g.has_edge(u, v) {
            return Err(Error::invalid(format!("edge ({u},{v}) not present")));
        }
    }
    let edges = g.edges().filter(|e| !remove.contains(e)).chain(add.iter().copied());
    let graph = Graph::new(g.n(), edges)?;
    let triangle_free = is_triangle_free(&graph);
    Ok(Perturbed { graph, triangle_free })
}

/// Number of edges with both ends in `s`.
pub fn induced_edge_count(g: &Graph, s: &VertexSet) -> usize {
    s.iter().map(|u| g.neighbors(u).iter().filter(|&&v| v > u && s.contains(v)).count()).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub min_deg: usize,
    pub max_deg: usize,
    pub sum_deg: usize,
    pub sum_deg_sq: usize,
}

pub fn degree_profile(g: &Graph) -> DegreeProfile {
    let mut p = DegreeProfile { min_deg: usize::MAX, max_deg: 0, sum_deg: 0, sum_deg_sq: 0 };
    for v in 0..g.n() {
        let d = g.degree(v);
        p.min_deg = p.min_deg.min(d);
        p.max_deg = p.max_deg.max(d);
        p.sum_deg += d;
        p.sum_deg_sq += d * d;
    }
    if g.n() == 0 {
        p.min_deg = 0;
    }
    p
}

pub fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    induced_edge_count(g, s) == 0
}

/// A proper 2-coloring (`0`/`1` per vertex) if the graph is bipartite. Each
/// component's lowest vertex gets color 0.
pub fn two_coloring(g: &Graph) -> Option<Vec<u8>> {
    let mut color = vec![u8::MAX; g.n()];
    let mut stack = Vec::new();
    for s in 0..g.n() {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for &v in g.neighbors(u) {
                if color[v] == u8::MAX {
                    color[v] = 1 - color[u];
                    stack.push(v);
                } else if color[v] == color[u] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

/// Upper bound on the independence number inside `cand`: the number of
/// cliques in a greedy clique cover.
fn clique_cover_bound(mut cand: u64, nbr: &[u64]) -> u32 {
    let mut cliques = 0;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= !(1u64 << v);
        let mut common = nbr[v] & cand;
        while common != 0 {
            let w = common.trailing_zeros() as usize;
            cand &= !(1u64 << w);
            common &= nbr[w] & cand;
        }
        cliques += 1;
    }
    cliques
}

fn max_independent_size(cur: u32, cand: u64, nbr: &[u64], best: &mut u32) {
    if cand == 0 {
        *best = (*best).max(cur);
        return;
    }
    if cur + clique_cover_bound(cand, nbr) <= *best {
        return;
    }
    let v = cand.trailing_zeros() as usize;
    let bit = 1u64 << v;
    max_independent_size(cur + 1, cand & !bit & !nbr[v], nbr, best);
    max_independent_size(cur, cand & !bit, nbr, best);
}

fn collect_independent(cur: u32, chosen: u64, cand: u64, nbr: &[u64], target: u32, out: &mut Vec<u64>) {
    if cur == target {
        out.push(chosen);
        return;
    }
    if cand == 0 || cur + clique_cover_bound(cand, nbr) < target {
        return;
    }
    let v = cand.trailing_zeros() as usize;
    let bit = 1u64 << v;
    collect_independent(cur + 1, chosen | bit, cand & !bit & !nbr[v], nbr, target, out);
    collect_independent(cur, chosen, cand & !bit, nbr, target, out);
}

/// Independence number, by branch and bound. Same guard as
/// [`maximum_independent_sets`].
pub fn independence_number(g: &Graph) -> Result<usize> {
    if g.n() > MIS_GUARD {
        return Err(Error::ResourceLimit(format!("n={} exceeds {MIS_GUARD}", g.n())));
    }
    let nbr = g.masks();
    let mut best = 0;
    max_independent_size(0, full_mask(g.n()), &nbr, &mut best);
    Ok(best as usize)
}

/// All independent sets of maximum size, in lexicographic order.
pub fn maximum_independent_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    let alpha = independence_number(g)? as u32;
    let nbr = g.masks();
    let mut found = Vec::new();
    collect_independent(0, 0, full_mask(g.n()), &nbr, alpha, &mut found);
    let mut sets: Vec<VertexSet> = found.into_iter().map(VertexSet::from_mask).collect();
    sets.sort();
    Ok(sets)
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Small named graphs used throughout tests and examples.
pub mod generators {
    use super::Graph;

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges_dedup(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))))
    }

    /// `K_{a,b}` with the first side on `0..a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_edges_dedup(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`, for `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        Graph::from_edges_dedup(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Graph {
        Graph::from_edges_dedup(k + 1, (1..=k).map(|v| (0, v)))
    }

    pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
        let off = a.n();
        Graph::from_edges_dedup(a.n() + b.n(), a.edges().chain(b.edges().map(|(u, v)| (u + off, v + off))))
    }
}

#[cfg(test)]
mod tests {
    use super::generators::*;
    use super::*;
    use crate::fd::{make_fd, make_petersen};

    fn brute_triangle_free(g: &Graph) -> bool {
        let n = g.n();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
    }

    #[test]
    fn triangle_detection() {
        assert!(!is_triangle_free(&complete(3)));
        assert!(is_triangle_free(&make_fd(2).unwrap()));
        let p = make_petersen();
        assert!(brute_triangle_free(&p));
        assert!(is_triangle_free(&p));
    }

    #[test]
    fn petersen_common_neighbors() {
        let p = make_petersen();
        for u in 0..10 {
            for v in 0..10 {
                if u == v {
                    continue;
                }
                let c = common_neighbors(&p, u, v).unwrap();
                let brute = (0..10).filter(|&w| p.has_edge(u, w) && p.has_edge(v, w)).count();
                assert_eq!(c.len(), brute);
                assert_eq!(c.len(), if p.has_edge(u, v) { 0 } else { 1 });
            }
        }
        let k22 = complete_bipartite(2, 2);
        assert_eq!(common_neighbors(&k22, 0, 1).unwrap(), VertexSet::new([2, 3]));
        assert!(matches!(common_neighbors(&p, 3, 3), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn maximality_examples() {
        let mc = maximality_class(&make_petersen()).unwrap();
        assert_eq!(mc, MaximalityClass { is_maximal: true, c_star: Some(rat(1, 10)) });
        let mc = maximality_class(&cycle(6)).unwrap();
        assert_eq!(mc, MaximalityClass { is_maximal: false, c_star: Some(rat(0, 1)) });
        let mc = maximality_class(&complete_bipartite(5, 5)).unwrap();
        assert_eq!(mc, MaximalityClass { is_maximal: true, c_star: Some(rat(1, 2)) });
        assert_eq!(maximality_class(&complete(2)).unwrap().c_star, None);
        assert!(matches!(maximality_class(&complete(3)), Err(Error::PreconditionViolation(_))));
    }

    #[test]
    fn blowup_examples() {
        let c5 = make_fd(2).unwrap();
        let (g, part) = blowup(&c5, &[2; 5]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (10, 20));
        assert_eq!(part.block_count(), 5);
        let (g1, _) = blowup(&c5, &[1; 5]).unwrap();
        assert_eq!(g1, c5);
        let (gp, _) = blowup(&make_petersen(), &[2; 10]).unwrap();
        assert_eq!((gp.n(), gp.edge_count()), (20, 60));
        assert!(blowup(&c5, &[]).is_err());
        assert!(blowup(&c5, &[1, 1]).is_err());
    }

    #[test]
    fn perturb_examples() {
        let c5 = make_fd(2).unwrap();
        let same = perturb(&c5, &[], &[]).unwrap();
        assert_eq!(same.graph, c5);
        let (b, _) = blowup(&c5, &[2; 5]).unwrap();
        let (u, v) = b.edges().next().unwrap();
        assert_eq!(perturb(&b, &[], &[(u, v)]).unwrap().graph.edge_count(), 19);
        // v1 ~ v3, v4 and v2 ~ v4, v5: joining v1 and v2 closes a triangle through v4.
        assert!(c5.has_edge(0, 3) && c5.has_edge(1, 3));
        let p = perturb(&c5, &[(0, 1)], &[]).unwrap();
        assert!(!p.triangle_free);
        assert!(perturb(&c5, &[(0, 2)], &[(0, 2)]).is_err());
    }

    #[test]
    fn induced_counts() {
        let p = make_petersen();
        // Labels v1, v3, v4, v7, v10.
        let s = VertexSet::new([0, 2, 3, 6, 9]);
        assert_eq!(induced_edge_count(&p, &s), 2);
        assert_eq!(induced_edge_count(&p, &VertexSet::default()), 0);
        let k4 = complete(4);
        assert_eq!(induced_edge_count(&k4, &VertexSet::new(0..4)), 6);
    }

    #[test]
    fn degree_profiles() {
        let dp = |g: &Graph| {
            let p = degree_profile(g);
            (p.min_deg, p.max_deg, p.sum_deg, p.sum_deg_sq)
        };
        assert_eq!(dp(&make_fd(2).unwrap()), (2, 2, 10, 20));
        assert_eq!(dp(&make_petersen()), (3, 3, 30, 90));
        assert_eq!(dp(&star(4)), (1, 4, 8, 20));
    }

    fn brute_mis(g: &Graph) -> Vec<VertexSet> {
        let n = g.n();
        let mut best = 0;
        let mut out = Vec::new();
        for mask in 0u64..(1 << n) {
            let s = VertexSet::from_mask(mask);
            if !is_independent(g, &s) {
                continue;
            }
            if s.len() > best {
                best = s.len();
                out.clear();
            }
            if s.len() == best {
                out.push(s);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn maximum_independent_set_examples() {
        let p = make_petersen();
        let sets = maximum_independent_sets(&p).unwrap();
        assert_eq!(sets, brute_mis(&p));
        assert_eq!(sets.len(), 5);
        assert!(sets.iter().all(|s| s.len() == 4));

        let f5 = make_fd(5).unwrap();
        let sets = maximum_independent_sets(&f5).unwrap();
        assert_eq!(sets, brute_mis(&f5));
        assert_eq!(sets.len(), 14);
        for s in &sets {
            assert_eq!(s.len(), 5);
            assert!((0..14).any(|v| VertexSet::new(f5.neighbors(v).iter().copied()) == *s));
        }

        let k4 = complete(4);
        assert_eq!(maximum_independent_sets(&k4).unwrap(), (0..4).map(|v| VertexSet::new([v])).collect::<Vec<_>>());
        assert!(matches!(maximum_independent_sets(&Graph::empty(65)), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn two_coloring_detects_odd_cycles() {
        assert!(two_coloring(&cycle(6)).is_some());
        assert!(two_coloring(&cycle(5)).is_none());
    }
}
