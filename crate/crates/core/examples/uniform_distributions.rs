//! Distributions over halves that cover every edge: the five `C5` halves and
//! the twenty `P*` halves.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sparse_halves::experiments::{balanced_c5_weighting, balanced_pstar_weighting};
use sparse_halves::fd::make_fd;
use sparse_halves::halves::{c5_uniform_distribution, pstar_distribution_with, pstar_layout};
use sparse_halves::rational::{fmt, rat};
use sparse_halves::weighted::certify;
use sparse_halves::{Result, WeightFunction};

pub fn run() -> Result<()> {
    let c5 = Arc::new(WeightFunction::uniform(make_fd(2)?)?);
    let cert = certify(&c5_uniform_distribution(&c5)?, &rat(1, 30));
    println!(
        "uniform C5: E[mass] = {}, uniformity = {}",
        fmt(&cert.expected_edge_mass),
        cert.uniformity_constant.as_ref().map(fmt).unwrap_or_default()
    );

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let wf = Arc::new(balanced_c5_weighting(&mut rng)?);
    let cert = certify(&c5_uniform_distribution(&wf)?, &rat(1, 30));
    println!("balanced C5 sample passes the 1/30 certificate: {}", cert.passes);

    let layout = pstar_layout()?;
    println!("P* layout: {} halves", layout.terms.len());
    let wf = Arc::new(balanced_pstar_weighting(&layout, &mut rng)?);
    let cert = certify(&pstar_distribution_with(&layout, &wf)?, &rat(1, 80));
    println!(
        "balanced P* sample: E[mass] = {}, passes the 1/80 certificate: {}",
        fmt(&cert.expected_edge_mass),
        cert.passes
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
