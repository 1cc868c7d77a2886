//! Joining hub vertices onto a cycle. The hubs stay singleton classes.

use chromcomp::completion::{zeta, Limits};
use chromcomp::families::{gen_cycle, gen_nested_join};

fn main() -> chromcomp::Result<()> {
    let base = gen_cycle(21)?;
    for depth in 1..=3 {
        let g = gen_nested_join(&base, depth)?;
        let r = zeta(&g, &Limits::default().with_workers(4))?;
        let mut theta = r.witness.theta();
        theta.sort_unstable();
        println!("depth {depth}: n={} chi={} zeta={} theta={theta:?}", g.order(), r.chi, r.zeta);
    }
    Ok(())
}
