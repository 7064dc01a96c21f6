//! The circulant family `F_d`, the Petersen graph, and star extensions `H*`
//! (one extra vertex per maximum independent set that is not a neighborhood).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_triangle_free, maximum_independent_sets, Graph, VertexSet, MIS_GUARD};

/// Largest `d` accepted by [`fd_fact_check`].
pub const FD_FACT_GUARD: usize = 9;

/// `F_d` on `3d - 1` vertices: vertex `j` is adjacent to `j + d, ..., j + 2d - 1`
/// modulo `3d - 1`. Label `v_j` is index `j - 1`.
pub fn make_fd(d: usize) -> Result<Graph> {
    if d == 0 {
        return Err(Error::invalid("F_d needs d >= 1"));
    }
    let n = 3 * d - 1;
    let edges = (0..n).flat_map(|j| (d..2 * d).map(move |off| (j, (j + off) % n)));
    Ok(Graph::from_edges_dedup(n, edges))
}

/// Petersen graph with labels `v_1..v_10` at indices `0..9`: outer
/// cycle `v1 v2 v3 v4 v5`, spokes `v_i v_{i+5}`, inner pentagram
/// `v6 v8 v10 v7 v9`.
pub fn make_petersen() -> Graph {
    const EDGES: [(usize, usize); 15] = [
        (10, 7),
        (7, 9),
        (9, 6),
        (6, 8),
        (8, 3),
        (10, 8),
        (10, 5),
        (7, 2),
        (9, 4),
        (6, 1),
        (5, 1),
        (2, 1),
        (2, 3),
        (4, 3),
        (4, 5),
    ];
    Graph::new(10, EDGES.iter().map(|&(a, b)| (a - 1, b - 1))).expect("static edge list")
}

/// `H*` together with the base graph and the independent set behind every
/// added vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarExtension {
    pub base: Graph,
    pub extension: Graph,
    /// `(index in extension, represented maximum independent set)`, in
    /// increasing index order; indices start at `base.n()`.
    pub added: Vec<(usize, VertexSet)>,
}

impl StarExtension {
    /// Independent set represented by extension vertex `v`, if `v` was added.
    pub fn represented(&self, v: usize) -> Option<&VertexSet> {
        v.checked_sub(self.base.n()).and_then(|i| self.added.get(i)).map(|(_, s)| s)
    }

    /// Extension vertex that stands for `set`, if any.
    pub fn vertex_for(&self, set: &VertexSet) -> Option<usize> {
        self.added.iter().find(|(_, s)| s == set).map(|&(v, _)| v)
    }
}

fn neighborhoods(h: &Graph) -> Vec<VertexSet> {
    (0..h.n()).map(|v| VertexSet::new(h.neighbors(v).iter().copied())).collect()
}

/// Maximum independent sets of `h` that are not vertex neighborhoods, in
/// lexicographic order.
pub fn non_neighborhood_maximum_sets(h: &Graph) -> Result<Vec<VertexSet>> {
    let nbhds = neighborhoods(h);
    Ok(maximum_independent_sets(h)?.into_iter().filter(|s| !nbhds.contains(s)).collect())
}

pub fn star_extension(h: &Graph) -> Result<StarExtension> {
    if h.n() > MIS_GUARD {
        return Err(Error::ResourceLimit(format!("n={} exceeds {MIS_GUARD}", h.n())));
    }
    let stars = non_neighborhood_maximum_sets(h)?;
    let base_n = h.n();
    let added: Vec<(usize, VertexSet)> = stars.into_iter().enumerate().map(|(i, s)| (base_n + i, s)).collect();
    let edges = h.edges().chain(added.iter().flat_map(|(w, s)| s.iter().map(move |v| (v, *w))));
    let extension = Graph::new(base_n + added.len(), edges)?;
    Ok(StarExtension { base: h.clone(), extension, added })
}

/// Every two maximum independent sets that are not neighborhoods intersect.
pub fn is_entwined(h: &Graph) -> Result<bool> {
    let stars = non_neighborhood_maximum_sets(h)?;
    Ok(stars.iter().enumerate().all(|(i, a)| stars[i + 1..].iter().all(|b| a.intersects(b))))
}

/// Exact `k`-colorability by backtracking in vertex order.
pub fn is_k_colorable(g: &Graph, k: usize) -> bool {
    fn go(g: &Graph, k: usize, v: usize, color: &mut [usize], used: usize) -> bool {
        if v == g.n() {
            return true;
        }
        // Colors above `used` are interchangeable; trying one of them suffices.
        for c in 0..k.min(used + 1) {
            if g.neighbors(v).iter().all(|&u| u > v || color[u] != c) {
                color[v] = c;
                if go(g, k, v + 1, color, used.max(c + 1)) {
                    return true;
                }
            }
        }
        false
    }
    if g.n() == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let mut color = vec![usize::MAX; g.n()];
    go(g, k, 0, &mut color, 0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FdFactReport {
    pub d: usize,
    pub triangle_free: bool,
    pub three_colorable: bool,
    pub alpha: usize,
    pub maximum_independent_sets: usize,
    pub alpha_equals_d: bool,
    pub only_neighborhoods: bool,
    pub pass: bool,
}

/// Checks that `F_d` is triangle-free, 3-colorable, has independence number
/// `d`, and that its maximum independent sets are exactly the neighborhoods.
pub fn fd_fact_check(d: usize) -> Result<FdFactReport> {
    if d > FD_FACT_GUARD {
        return Err(Error::ResourceLimit(format!("d={d} exceeds {FD_FACT_GUARD}")));
    }
    let g = make_fd(d)?;
    let triangle_free = is_triangle_free(&g);
    let three_colorable = is_k_colorable(&g, 3);
    let sets = maximum_independent_sets(&g)?;
    let alpha = sets.first().map_or(0, |s| s.len());
    let mut nbhds = neighborhoods(&g);
    nbhds.sort();
    nbhds.dedup();
    let only_neighborhoods = sets == nbhds;
    let alpha_equals_d = alpha == d;
    Ok(FdFactReport {
        d,
        triangle_free,
        three_colorable,
        alpha,
        maximum_independent_sets: sets.len(),
        alpha_equals_d,
        only_neighborhoods,
        pass: triangle_free && three_colorable && alpha_equals_d && only_neighborhoods,
    })
}
