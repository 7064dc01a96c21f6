//! The circulants `F_d`, the Petersen graph and its star extension `P*`.

use sparse_halves::fd::{fd_fact_check, is_entwined, make_fd, make_petersen, star_extension};
use sparse_halves::graph::{degree_profile, maximality_class};
use sparse_halves::Result;

pub fn run() -> Result<()> {
    for d in 1..=5 {
        let g = make_fd(d)?;
        let facts = fd_fact_check(d)?;
        let p = degree_profile(&g);
        println!(
            "F_{d}: n = {}, m = {}, {}-regular, alpha = {}, 3-colorable = {}, only neighborhoods = {}",
            g.n(),
            g.edge_count(),
            p.min_deg,
            facts.alpha,
            facts.three_colorable,
            facts.only_neighborhoods
        );
        assert!(facts.pass);
    }

    let petersen = make_petersen();
    let star = star_extension(&petersen)?;
    println!(
        "Petersen: maximal = {}, entwined = {}, P* has {} vertices and {} edges",
        maximality_class(&petersen)?.is_maximal,
        is_entwined(&petersen)?,
        star.extension.n(),
        star.extension.edge_count()
    );
    for (w, set) in &star.added {
        println!("  star vertex {w} attached to {:?}", set.members());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
