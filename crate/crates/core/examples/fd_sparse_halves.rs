//! Explicit sparse halves of weighted `F_d` under the minimum-degree
//! hypothesis.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sparse_halves::experiments::feasible_fd_weighting;
use sparse_halves::halves::{best_sparse_half_fd, construct_fd_halves, FdWeighting};
use sparse_halves::rational::fmt;
use sparse_halves::weighted::edge_mass;
use sparse_halves::Result;

pub fn run() -> Result<()> {
    for d in 1..=5 {
        let fw = FdWeighting::uniform(d)?;
        let candidates = construct_fd_halves(&fw)?;
        let best = best_sparse_half_fd(&fw)?;
        println!("uniform F_{d}: {} candidate halves, best mass {}", candidates.len(), fmt(&edge_mass(&best)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for d in 2..=4 {
        if let Some((fw, draws)) = feasible_fd_weighting(d, &mut rng, 10_000)? {
            let best = best_sparse_half_fd(&fw)?;
            println!("random F_{d} weighting after {draws} draws: best mass {}", fmt(&edge_mass(&best)));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
