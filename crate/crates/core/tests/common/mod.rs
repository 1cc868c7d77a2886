//! Brute-force references and graph corpora shared by the integration tests.
//! Nothing here calls the solver or the chromatic-partition iterator.

#![allow(dead_code)]

use chromcomp::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// All set partitions of `0..n` as restricted-growth strings.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let limit = if prefix.is_empty() { 0 } else { max + 1 };
        for c in 0..=limit {
            prefix.push(c);
            rec(prefix, max.max(c), n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), 0, n, &mut out);
    out
}

fn is_proper(g: &Graph, colours: &[usize]) -> bool {
    g.edges().all(|(u, v)| colours[u] != colours[v])
}

fn class_count(colours: &[usize]) -> usize {
    colours.iter().max().map_or(0, |m| m + 1)
}

fn cross_pairs(colours: &[usize]) -> u64 {
    let n = colours.len();
    let mut count = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if colours[u] != colours[v] {
                count += 1;
            }
        }
    }
    count
}

/// χ and ζ by filtering every set partition of the vertex set (n ≤ 11).
pub struct BruteForce {
    pub chi: usize,
    pub zeta: u64,
    /// Restricted-growth strings of every chromatic partition attaining `zeta`.
    pub optima: Vec<Vec<usize>>,
    pub chromatic_partitions: usize,
}

pub fn brute_force(g: &Graph) -> BruteForce {
    assert!(g.order() <= 11, "brute force is for small graphs");
    let proper: Vec<Vec<usize>> = set_partitions(g.order())
        .into_iter()
        .filter(|p| is_proper(g, p))
        .collect();
    let chi = proper.iter().map(|p| class_count(p)).min().unwrap();
    let chromatic: Vec<&Vec<usize>> = proper.iter().filter(|p| class_count(p) == chi).collect();
    let eps = g.size() as u64;
    let zeta = chromatic.iter().map(|p| cross_pairs(p) - eps).max().unwrap();
    let optima = chromatic
        .iter()
        .filter(|p| cross_pairs(p) - eps == zeta)
        .map(|p| (*p).clone())
        .collect();
    BruteForce {
        chi,
        zeta,
        optima,
        chromatic_partitions: chromatic.len(),
    }
}

/// Proper colourings with exactly `k` colours, all used, counted over all `k^n` assignments.
pub fn count_surjective_proper(g: &Graph, k: usize) -> u64 {
    let n = g.order();
    let mut colours = vec![0usize; n];
    let mut count = 0;
    loop {
        let mut used = vec![false; k];
        colours.iter().for_each(|&c| used[c] = true);
        if used.iter().all(|&u| u) && is_proper(g, &colours) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            colours[i] += 1;
            if colours[i] < k {
                break;
            }
            colours[i] = 0;
            i += 1;
        }
    }
}

pub fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Fixed-seed corpus of connected labelled graphs with `2 <= n <= max_n`.
pub fn random_connected_corpus(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(2..=max_n);
        let p: f64 = rng.gen_range(0.2..0.9);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        if is_connected(n, &edges) {
            out.push(Graph::new(n, edges).unwrap());
        }
    }
    out
}

/// Every ordered list of positive parts with total at most `max_total`.
pub fn compositions(max_total: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        for p in 1..=left {
            prefix.push(p);
            rec(left - p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(max_total, &mut Vec::new(), &mut out);
    out
}
