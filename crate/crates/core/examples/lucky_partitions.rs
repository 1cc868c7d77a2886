//! Balanced partitions maximise the pairwise product sum.

use chromcomp::partition::{completion_partition, lucky_sum_product, max_partition_oracle};

fn main() -> chromcomp::Result<()> {
    for (n, l) in [(5, 3), (8, 3), (12, 5), (14, 4)] {
        let balanced = completion_partition(n, l)?;
        let (max, argmax) = max_partition_oracle(n, l)?;
        println!(
            "n={n} l={l}: balanced {balanced} gives {}, exhaustive max {max} at {}",
            lucky_sum_product(n, l)?,
            argmax.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
        );
    }
    Ok(())
}
