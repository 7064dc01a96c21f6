//! Seeded instance generators and batch runners used by the CLI, the
//! examples and the acceptance suite. Every sampler takes an explicit RNG;
//! nothing reads the clock.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fd::{make_fd, make_petersen, star_extension};
use crate::graph::{blowup, degree_profile, is_triangle_free, Graph, Partition, VertexSet};
use crate::halves::{min_degree_threshold, sparse_half_pipeline, FdWeighting, PStarLayout};
use crate::oracle::min_half_edges;
use crate::rational::{rat, Rational};
use crate::weighted::{weighted_min_degree, WeightFunction};

/// Largest size of a single part tried by [`random_fd_blowup`].
fn part_cap(d: usize, max_n: usize) -> usize {
    max_n / (3 * d - 1) + 1
}

/// A blowup of `F_d` with at most `max_n` vertices and minimum degree at
/// least `5n/14`, by rejection over part sizes. Empty parts are allowed,
/// so the natural map into `F_d` need not be surjective. Returns the graph
/// and the part sizes in `F_d` order.
pub fn random_fd_blowup(
    d: usize,
    max_n: usize,
    rng: &mut ChaCha8Rng,
    tries: usize,
) -> Result<Option<(Graph, Vec<usize>)>> {
    let fd = make_fd(d)?;
    let cap = part_cap(d, max_n);
    for _ in 0..tries {
        let sizes: Vec<usize> = (0..fd.n()).map(|_| rng.gen_range(0..=cap)).collect();
        let n: usize = sizes.iter().sum();
        if n < 2 || n > max_n {
            continue;
        }
        // Empty parts drop out of the template.
        let used = VertexSet::new((0..fd.n()).filter(|&j| sizes[j] > 0));
        let nonzero: Vec<usize> = used.iter().map(|j| sizes[j]).collect();
        let (g, _) = blowup(&fd.induced_subgraph(&used), &nonzero)?;
        if 14 * degree_profile(&g).min_deg >= 5 * n {
            return Ok(Some((g, sizes)));
        }
    }
    Ok(None)
}

/// One pipeline run on a generated graph.
#[derive(Clone, Debug, Serialize)]
pub struct PipelineCase {
    pub template_d: usize,
    pub sizes: Vec<usize>,
    pub n: usize,
    /// `d` of the target the pipeline actually used.
    pub used_d: Option<usize>,
    pub set_size: usize,
    pub induced_edges: usize,
    pub oracle_min: Option<usize>,
    pub ok: bool,
    pub error: Option<String>,
}

/// Runs the minimum-degree pipeline on `count` random `F_d` blowups,
/// cycling `d` through `1..=5`, and compares with the oracle when
/// `n <= oracle_max`.
pub fn pipeline_batch(
    count: usize,
    max_n: usize,
    oracle_max: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<PipelineCase>> {
    let mut out = Vec::with_capacity(count);
    let mut d = 0;
    while out.len() < count {
        d = d % 5 + 1;
        let Some((g, sizes)) = random_fd_blowup(d, max_n, rng, 100_000)? else { continue };
        let n = g.n();
        let oracle_min = if n <= oracle_max { Some(min_half_edges(&g)?.1) } else { None };
        let case = match sparse_half_pipeline(&g) {
            Ok(r) => PipelineCase {
                template_d: d,
                sizes,
                n,
                used_d: Some(r.d),
                set_size: r.set.len(),
                induced_edges: r.induced_edges,
                oracle_min,
                ok: r.set.len() == n / 2
                    && 50 * r.induced_edges <= n * n
                    && oracle_min.is_none_or(|m| m <= r.induced_edges),
                error: None,
            },
            Err(e) => PipelineCase {
                template_d: d,
                sizes,
                n,
                used_d: None,
                set_size: 0,
                induced_edges: 0,
                oracle_min,
                ok: false,
                error: Some(e.to_string()),
            },
        };
        out.push(case);
    }
    Ok(out)
}

/// Random weights near uniform on `F_d`: vertex `v` gets `base + u_v` with
/// `u_v` uniform in `[-spread, spread]`, normalized. The scale `base` is
/// drawn per sample so both mild and strong perturbations appear.
pub fn perturbed_fd_weights(d: usize, rng: &mut ChaCha8Rng) -> Vec<Rational> {
    let n = 3 * d - 1;
    let spread = 60i64;
    let base = *[60i64, 120, 240, 480, 960].choose(rng).expect("non-empty");
    let raw: Vec<i64> = (0..n).map(|_| base + rng.gen_range(-spread..=spread)).collect();
    let total: i64 = raw.iter().sum();
    raw.iter().map(|&x| rat(x, total)).collect()
}

/// A weighting of `F_d` with weighted minimum degree at least `5/14`, by
/// rejection from [`perturbed_fd_weights`]. Returns the weighting and the
/// number of draws it took.
pub fn feasible_fd_weighting(d: usize, rng: &mut ChaCha8Rng, tries: usize) -> Result<Option<(FdWeighting, usize)>> {
    let g = Arc::new(make_fd(d)?);
    let threshold = min_degree_threshold();
    for k in 1..=tries {
        let w = perturbed_fd_weights(d, rng);
        let wf = WeightFunction::new(g.clone(), w)?;
        if weighted_min_degree(&wf) >= threshold {
            return Ok(Some((FdWeighting::from_weight_function(Arc::new(wf))?, k)));
        }
    }
    Ok(None)
}

/// A `(1/50)`-balanced weighting of `C5`, deviations at most `1/50` exactly.
pub fn balanced_c5_weighting(rng: &mut ChaCha8Rng) -> Result<WeightFunction> {
    let k = 1000i64;
    loop {
        let mut e: Vec<i64> = (0..4).map(|_| rng.gen_range(-k..=k)).collect();
        let last = -e.iter().sum::<i64>();
        if last.abs() > k {
            continue;
        }
        e.push(last);
        // 1/5 + e / (50 k)
        let w = e.iter().map(|&x| rat(10 * k + x, 50 * k)).collect();
        return WeightFunction::new(make_fd(2)?, w);
    }
}

/// A `(1/500)`-balanced weighting of `P*`: Petersen vertices within `1/500`
/// of `1/10`, star vertices in `[0, 1/500]`.
pub fn balanced_pstar_weighting(layout: &PStarLayout, rng: &mut ChaCha8Rng) -> Result<WeightFunction> {
    let k = 200i64;
    // Unit 1 / (5000 k); the deviation cap 1/500 is 10 k units.
    let cap = 10 * k;
    loop {
        let y: Vec<i64> = (0..5).map(|_| rng.gen_range(0..=cap)).collect();
        let mut e: Vec<i64> = (0..10).map(|_| rng.gen_range(-cap..=cap)).collect();
        let excess: i64 = y.iter().sum::<i64>() + e.iter().sum::<i64>();
        // Spread the excess; the remainder goes to the first vertices.
        let (q, r) = (excess.div_euclid(10), excess.rem_euclid(10));
        for (i, x) in e.iter_mut().enumerate() {
            *x -= q + i64::from((i as i64) < r);
        }
        if e.iter().any(|x| x.abs() > cap) {
            continue;
        }
        let unit = 5000 * k;
        let w = e.iter().map(|&x| rat(unit / 10 + x, unit)).chain(y.iter().map(|&x| rat(x, unit))).collect();
        return WeightFunction::new(layout.graph().clone(), w);
    }
}

/// A graph with `n` vertices and at least `(1/5 - delta) n^2` edges, drawn
/// from `G(n, p)` or from a lightly thinned blowup of a random template.
pub fn random_dense_graph(n: usize, delta: &Rational, rng: &mut ChaCha8Rng) -> Result<Graph> {
    let need = (rat(1, 5) - delta) * rat((n * n) as i64, 1);
    loop {
        let g = if rng.gen_bool(0.5) {
            let p: f64 = rng.gen_range(0.38..0.7);
            let edges: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
            Graph::new(n, edges)?
        } else {
            let template = match rng.gen_range(0..4) {
                0 => make_fd(1)?,
                1 => make_fd(2)?,
                2 => make_fd(3)?,
                _ => make_petersen(),
            };
            let k = template.n();
            let mut assign: Vec<usize> = (0..n).map(|v| v % k).collect();
            assign.shuffle(rng);
            let keep: f64 = rng.gen_range(0.9..1.0);
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| template.has_edge(assign[u], assign[v]))
                .filter(|_| rng.gen_bool(keep))
                .collect();
            Graph::new(n, edges)?
        };
        if rat(g.edge_count() as i64, 1) >= need {
            return Ok(g);
        }
    }
}

/// A perturbed blowup of the Petersen graph with its original partition.
#[derive(Clone, Debug)]
pub struct PerturbedPetersen {
    pub graph: Graph,
    pub partition: Partition,
    /// Vertices rewired to the blocks of a neighborhood or a star set.
    pub relocated: Vec<usize>,
    pub removed: usize,
    /// `|E(G) xor E(H_V)|`.
    pub flips: usize,
}

/// Petersen blowup with `block` vertices per part, randomly relabeled, then
/// `relocations` vertices rewired and `removals` edges deleted. Rewirings
/// that would create a triangle are skipped.
pub fn perturbed_petersen_blowup(
    block: usize,
    relocations: usize,
    removals: usize,
    rng: &mut ChaCha8Rng,
) -> Result<PerturbedPetersen> {
    let p = make_petersen();
    let (g0, part0) = blowup(&p, &[block; 10])?;
    let n = g0.n();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let g = g0.relabel(&perm)?;
    let mut assign = vec![0; n];
    for v in 0..n {
        assign[perm[v]] = part0.block_of(v);
    }
    let partition = Partition::from_assignment(&assign, 10)?;
    let star = star_extension(&p)?;
    // Target block sets: neighborhoods and star sets of the template.
    let mut targets: Vec<Vec<usize>> = (0..10).map(|i| p.neighbors(i).to_vec()).collect();
    targets.extend(star.added.iter().map(|(_, s)| s.members().to_vec()));

    let mut adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
    let mut relocated = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for &v in order.iter() {
        if relocated.len() == relocations {
            break;
        }
        let blocks = targets.choose(rng).expect("non-empty");
        let mut trial = adj.clone();
        for u in 0..n {
            let on = u != v && blocks.contains(&assign[u]);
            trial[v][u] = on;
            trial[u][v] = on;
        }
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |w| (u, w)));
        let cand = Graph::new(n, edges.filter(|&(u, w)| trial[u][w]))?;
        if is_triangle_free(&cand) {
            adj = trial;
            relocated.push(v);
        }
    }
    let mut present: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |w| (u, w))).filter(|&(u, w)| adj[u][w]).collect();
    present.shuffle(rng);
    let removed = removals.min(present.len());
    for &(u, w) in &present[..removed] {
        adj[u][w] = false;
        adj[w][u] = false;
    }
    let graph = Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |w| (u, w))).filter(|&(u, w)| adj[u][w]))?;
    if !is_triangle_free(&graph) {
        return Err(Error::TheoremViolation("edge removal created a triangle".into()));
    }
    let flips = (0..n)
        .flat_map(|u| (u + 1..n).map(move |w| (u, w)))
        .filter(|&(u, w)| graph.has_edge(u, w) != p.has_edge(assign[u], assign[w]))
        .count();
    Ok(PerturbedPetersen { graph, partition, relocated, removed, flips })
}
