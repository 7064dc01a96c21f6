//! Exact evaluation of the cycle and Petersen inequalities and a short
//! randomized search for counterexamples.

use sparse_halves::lemmas::{falsify, lemma11_min_lhs, lemma8_min_lhs, petersen_sum, LemmaId};
use sparse_halves::rational::{fmt, rat, zero};
use sparse_halves::Result;

pub fn run() -> Result<()> {
    println!("8-cycle at uniform: {}", fmt(&lemma8_min_lhs(&vec![rat(1, 8); 8])?));
    println!("11-cycle at uniform: {}", fmt(&lemma11_min_lhs(&vec![rat(1, 11); 11])?));
    println!("Petersen sum at uniform: {}", fmt(&petersen_sum(&vec![rat(1, 10); 10], &vec![zero(); 5], &rat(1, 90))?));
    for id in LemmaId::ALL {
        let r = falsify(id, 2_000, 42)?;
        println!("{:>9}: worst {:.6} against bound {}, refuted = {}", id.name(), r.worst_score, r.bound, r.refuted());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
