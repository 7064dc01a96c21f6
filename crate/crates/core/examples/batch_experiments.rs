//! Seeded batch run of the minimum-degree pipeline on random `F_d` blowups,
//! emitted as CSV.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sparse_halves::experiments::pipeline_batch;
use sparse_halves::Result;

pub fn run() -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let cases = pipeline_batch(10, 20, 20, &mut rng)?;
    println!("template_d,n,used_d,induced_edges,oracle_min,ok");
    for c in &cases {
        println!(
            "{},{},{},{},{},{}",
            c.template_d,
            c.n,
            c.used_d.map(|d| d.to_string()).unwrap_or_default(),
            c.induced_edges,
            c.oracle_min.map(|m| m.to_string()).unwrap_or_default(),
            c.ok
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
