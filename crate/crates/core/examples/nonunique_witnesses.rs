//! C5 has several optimal colourings that add different edge sets.

use chromcomp::completion::{completion_edges, zeta, Limits};
use chromcomp::families::gen_cycle;

fn main() -> chromcomp::Result<()> {
    let g = gen_cycle(5)?;
    let r = zeta(&g, &Limits::default().collecting_all())?;
    println!("zeta(C5) = {}, {} optimal colourings", r.zeta, r.optima.len());
    for c in &r.optima {
        println!("{:?} adds {:?}", c.classes(), completion_edges(&g, c)?);
    }
    Ok(())
}
