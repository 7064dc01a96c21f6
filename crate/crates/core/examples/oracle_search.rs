//! Exact minimum over all halves of small graphs, and fractional descent.

use std::sync::Arc;

use sparse_halves::fd::{make_fd, make_petersen};
use sparse_halves::graph::blowup;
use sparse_halves::oracle::{fractional_descent, oracle_report};
use sparse_halves::rational::fmt;
use sparse_halves::weighted::edge_mass;
use sparse_halves::{Result, WeightFunction};

pub fn run() -> Result<()> {
    let graphs = [
        ("C5(2)", blowup(&make_fd(2)?, &[2; 5])?.0),
        ("C5(4)", blowup(&make_fd(2)?, &[4; 5])?.0),
        ("Petersen", make_petersen()),
        ("Petersen(2)", blowup(&make_petersen(), &[2; 10])?.0),
    ];
    for (name, g) in graphs {
        let r = oracle_report(&g)?;
        println!("{name}: min {} vs n^2/50 = {}, tight {}", r.min_edges, fmt(&r.bound), r.tight);
    }
    let wf = Arc::new(WeightFunction::uniform(make_petersen())?);
    let h = fractional_descent(&wf, 8, 3)?;
    println!("fractional descent on uniform Petersen: mass {}", fmt(&edge_mass(&h)));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
