//! Compute ζ for a small graph and print the optimal colouring and added edges.

use chromcomp::completion::{zeta, Limits};
use chromcomp::Graph;

fn main() -> chromcomp::Result<()> {
    // A 5-cycle with one chord.
    let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])?;
    let r = zeta(&g, &Limits::default())?;
    println!("chi = {}", r.chi);
    println!("zeta = {} (exact: {})", r.zeta, r.exact);
    println!("classes = {:?}", r.witness.classes());
    println!("added edges = {:?}", r.completion_edges);
    println!("completed graph has {} edges", r.pseudo_size);
    Ok(())
}
