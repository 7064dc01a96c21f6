//! Writing and reading edge lists, weights and half distributions.

use std::sync::Arc;

use sparse_halves::fd::make_fd;
use sparse_halves::halves::c5_uniform_distribution;
use sparse_halves::io::{parse_distribution, parse_edge_list, write_distribution, write_edge_list};
use sparse_halves::{Result, WeightFunction};

pub fn run() -> Result<()> {
    let text = write_edge_list(&make_fd(2)?);
    print!("{text}");
    let g = Arc::new(parse_edge_list(&text)?);
    let wf = Arc::new(WeightFunction::uniform(g)?);
    let dist_text = write_distribution(&c5_uniform_distribution(&wf)?);
    let back = parse_distribution(&dist_text, wf)?;
    println!("distribution with {} halves survives a round trip", back.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
