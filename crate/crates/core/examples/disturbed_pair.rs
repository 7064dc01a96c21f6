//! A perturbed Petersen blowup, its disturbed pair `(G', phi)` and the
//! checks on it.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sparse_halves::experiments::perturbed_petersen_blowup;
use sparse_halves::fd::make_petersen;
use sparse_halves::homomorphism::{build_disturbed_pair, verify_disturbed};
use sparse_halves::rational::{fmt, int, rat, sq};
use sparse_halves::Result;

pub fn run() -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let pp = perturbed_petersen_blowup(8, 1, 4, &mut rng)?;
    let n = pp.graph.n() as i64;
    let delta = rat(pp.flips as i64, n * n);
    let dp = build_disturbed_pair(&pp.graph, &make_petersen(), &pp.partition, &delta)?;
    // The conclusions need eps >= delta + 2 sqrt(delta); take a rational
    // upper bound for the root.
    let root = rat(((pp.flips as f64).sqrt().ceil()) as i64, n);
    let eps = &delta + int(2) * &root;
    assert!(sq(&root) >= delta);
    let report = verify_disturbed(&dp, &eps);
    println!(
        "n = {n}, |F| = {}, |J| = {}, eps = {}: disturbed {}, balanced {}, strong {}",
        dp.f_edges.len(),
        report.j_size,
        fmt(&eps),
        report.disturbed,
        report.balanced,
        report.strong
    );
    for pl in &dp.placements {
        println!("  vertex {} placed at {} by {:?}", pl.vertex, pl.image, pl.rule);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
