//! Integer ℓ-partitions and the balanced ("completion") partition that
//! maximizes the sum of pairwise part products.

use std::fmt;

use crate::error::{Error, Result};

/// Largest `n` accepted by [`max_partition_oracle`].
pub const ORACLE_MAX_TOTAL: u64 = 30;

/// A multiset of positive parts, kept sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionSpec {
    parts: Vec<u64>,
}

impl PartitionSpec {
    /// Canonicalizes `parts`; every part must be positive and there must be at least one.
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Domain("partition needs at least one part".into()));
        }
        if parts.contains(&0) {
            return Err(Error::Domain("partition parts must be positive".into()));
        }
        parts.sort_unstable();
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of parts ℓ.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum_of_squares(&self) -> u64 {
        self.parts.iter().map(|p| p * p).sum()
    }

    /// Sum over unordered pairs of distinct positions of the product of the two parts.
    pub fn sum_permutated_term_products(&self) -> u64 {
        let n = self.total();
        (n * n - self.sum_of_squares()) / 2
    }
}

impl fmt::Display for PartitionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

pub fn sum_permutated_term_products(p: &PartitionSpec) -> u64 {
    p.sum_permutated_term_products()
}

fn check_domain(n: u64, l: u64) -> Result<()> {
    if l < 2 {
        return Err(Error::Domain(format!("l = {l} must be at least 2")));
    }
    if l > n {
        return Err(Error::Domain(format!("l = {l} exceeds n = {n}")));
    }
    Ok(())
}

/// `(l - r)` parts of `⌊n/l⌋` followed by `r` parts of `⌈n/l⌉`, with `r = n mod l`.
pub fn completion_partition(n: u64, l: u64) -> Result<PartitionSpec> {
    check_domain(n, l)?;
    let (q, r) = (n / l, n % l);
    let parts = std::iter::repeat(q)
        .take((l - r) as usize)
        .chain(std::iter::repeat(q + 1).take(r as usize))
        .collect();
    PartitionSpec::new(parts)
}

/// The ℓ-completion sum-product: the pairwise-product sum of the completion partition.
pub fn lucky_sum_product(n: u64, l: u64) -> Result<u64> {
    Ok(completion_partition(n, l)?.sum_permutated_term_products())
}

/// Exhaustive maximum of the pairwise-product sum over every `l`-partition of `n`,
/// together with all partitions attaining it (ascending lexicographic order).
pub fn max_partition_oracle(n: u64, l: u64) -> Result<(u64, Vec<PartitionSpec>)> {
    check_domain(n, l)?;
    if n > ORACLE_MAX_TOTAL {
        return Err(Error::GuardExceeded {
            order: n as usize,
            limit: ORACLE_MAX_TOTAL as usize,
        });
    }
    let mut best = 0u64;
    let mut argmax = Vec::new();
    let mut current = Vec::with_capacity(l as usize);
    each_partition(n, l as usize, 1, &mut current, &mut |parts| {
        let p = PartitionSpec {
            parts: parts.to_vec(),
        };
        let value = p.sum_permutated_term_products();
        if value > best || argmax.is_empty() {
            best = value;
            argmax.clear();
        }
        if value == best {
            argmax.push(p);
        }
    });
    Ok((best, argmax))
}

/// Visits every non-decreasing sequence of `slots` parts, each ≥ `min_part`, summing to `remaining`.
fn each_partition(
    remaining: u64,
    slots: usize,
    min_part: u64,
    current: &mut Vec<u64>,
    visit: &mut dyn FnMut(&[u64]),
) {
    if slots == 1 {
        if remaining >= min_part {
            current.push(remaining);
            visit(current);
            current.pop();
        }
        return;
    }
    let mut part = min_part;
    while part * slots as u64 <= remaining {
        current.push(part);
        each_partition(remaining - part, slots - 1, part, current, visit);
        current.pop();
        part += 1;
    }
}
