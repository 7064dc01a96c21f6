//! Weight functions, halves, edge mass and rounding a fractional half to a
//! vertex set.

use std::sync::Arc;

use sparse_halves::fd::make_petersen;
use sparse_halves::graph::{induced_edge_count, maximum_independent_sets};
use sparse_halves::rational::{fmt, rat, zero};
use sparse_halves::weighted::{edge_mass, is_sparse_half, round_half_traced, weighted_min_degree};
use sparse_halves::{Half, Result, WeightFunction};

pub fn run() -> Result<()> {
    let g = Arc::new(make_petersen());
    let wf = Arc::new(WeightFunction::uniform(g.clone())?);
    println!("uniform Petersen: weighted min degree {}", fmt(&weighted_min_degree(&wf)));

    // Full weight on a maximum independent set, 1/20 on two non-adjacent
    // vertices outside it; each sends two edges into the set.
    let indep = maximum_independent_sets(&g)?.remove(0);
    let mut s = vec![zero(); g.n()];
    for v in indep.iter() {
        s[v] = rat(1, 10);
    }
    let outside: Vec<usize> = (0..g.n()).filter(|&v| !indep.contains(v)).collect();
    let x = outside[0];
    let y = *outside.iter().find(|&&y| y != x && !g.has_edge(x, y)).expect("Petersen has non-edges");
    s[x] = rat(1, 20);
    s[y] = rat(1, 20);
    let h = Half::new(wf.clone(), s)?;
    println!("half mass {} (sparse: {})", fmt(&edge_mass(&h)), is_sparse_half(&h));

    let trace = round_half_traced(&h)?;
    let masses: Vec<String> = trace.masses.iter().map(fmt).collect();
    println!("rounding masses: {}", masses.join(" -> "));
    println!("rounded set {:?} spans {} edges", trace.set.members(), induced_edge_count(&g, &trace.set));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
