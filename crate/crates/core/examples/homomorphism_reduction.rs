//! Homomorphism search and the reduction to a surjective map onto some
//! `F_d`.

use sparse_halves::fd::make_fd;
use sparse_halves::graph::blowup;
use sparse_halves::homomorphism::{desurject_reduce, find_homomorphism, surjective_homomorphism_to_fd};
use sparse_halves::{Error, Result};

pub fn run() -> Result<()> {
    let f3 = make_fd(3)?;
    let (g, _) = blowup(&f3, &[2, 1, 2, 1, 2, 1, 2, 1])?;
    let phi = find_homomorphism(&g, &f3)?.ok_or_else(|| Error::NotApplicable("no map".into()))?;
    println!("blowup of F_3 on {} vertices maps onto F_3: surjective = {}", g.n(), phi.is_surjective());

    // Skip vertex 0 of F_4: the image is no longer onto, so reduce to F_3.
    let f4 = make_fd(4)?;
    let used: Vec<usize> = (1..11).collect();
    let sub = f4.induced_subgraph(&used.iter().copied().collect());
    let (g, part) = blowup(&sub, &[1; 10])?;
    let map: Vec<usize> = part.assignment().iter().map(|&b| used[b]).collect();
    let phi = sparse_halves::Homomorphism::new(g.clone(), f4, map)?;
    let reduced = desurject_reduce(&phi)?;
    println!(
        "non-surjective map into F_4 reduces to F_{} with fibers {:?}",
        (reduced.target().n() + 1) / 3,
        reduced.fiber_sizes()
    );

    if let Some((d, psi)) = surjective_homomorphism_to_fd(&g, 5)? {
        println!("smallest surjective target: F_{d}, fibers {:?}", psi.fiber_sizes());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
