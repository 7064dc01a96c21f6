//! From a triangle-free graph of minimum degree at least `5n/14` to a set of
//! `floor(n/2)` vertices spanning at most `n^2/50` edges.

use sparse_halves::fd::make_fd;
use sparse_halves::graph::blowup;
use sparse_halves::halves::sparse_half_pipeline;
use sparse_halves::rational::fmt;
use sparse_halves::Result;

pub fn run() -> Result<()> {
    let cases: [(usize, Vec<usize>); 4] = [(1, vec![5, 4]), (2, vec![4; 5]), (4, vec![2; 11]), (5, vec![2; 14])];
    for (d, sizes) in cases {
        let (g, _) = blowup(&make_fd(d)?, &sizes)?;
        let r = sparse_half_pipeline(&g)?;
        println!(
            "blowup of F_{d}, n = {}: target F_{}, F_d half mass {}, lifted {}, set of {} spans {} <= {}",
            r.n,
            r.d,
            fmt(&r.fd_half_mass),
            fmt(&r.lifted_mass),
            r.set.len(),
            r.induced_edges,
            r.bound
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
