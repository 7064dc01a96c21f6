//! Approximation by blowups, covering sets, the degree dichotomy and the
//! trichotomy classifier.

use sparse_halves::approximation::{check_eps_approximation, classify_trichotomy, degree_dichotomy, min_covering_set};
use sparse_halves::fd::make_fd;
use sparse_halves::graph::{blowup, generators, perturb};
use sparse_halves::rational::{fmt, rat};
use sparse_halves::Result;

pub fn run() -> Result<()> {
    let c5 = make_fd(2)?;
    let (g, part) = blowup(&c5, &[4; 5])?;
    let (u, v) = g.edges().next().expect("has edges");
    let thinned = perturb(&g, &[], &[(u, v)])?.graph;
    let w = check_eps_approximation(&thinned, &c5, &part)?;
    println!("C5 blowup minus one edge: eps = {}", fmt(&w.eps_achieved));

    let cover = min_covering_set(&generators::cycle(5), &generators::cycle(5).edges().collect::<Vec<_>>())?;
    println!("minimum cover of C5 edges: {:?}", cover.d_set.members());

    let k = generators::complete_bipartite(10, 10);
    let d = degree_dichotomy(&k, &rat(1, 100))?;
    println!("K_10,10 dichotomy: {:?}", d.outcome);

    for (name, graph) in [("C5 blowup", g), ("K_10,10", k)] {
        let r = classify_trichotomy(&graph, &rat(1, 10), Some(&rat(1, 100)))?;
        println!("{name}: outcome {:?}, applicable {:?}", r.outcome, r.applicable);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
