//! Branch-and-bound over chromatic partitions minimizing the sum of squared
//! class sizes, which is the same as maximizing the cross-class pair count.
//!
//! Two passes:
//! 1. saturation-ordered search (optionally parallel) finds the optimum value;
//! 2. a lexicographic restricted-growth search, pruned against that value,
//!    returns the least canonical optimal colouring (or all of them).
//!
//! Both passes bound a partial colouring by filling the unassigned vertices
//! into the smallest classes one at a time, i.e. the balanced completion of
//! the remainder.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;

use crate::coloring::most_saturated;

/// Smallest sum of squares reachable by adding `extra` units to `sizes`.
pub(crate) fn balanced_fill_sum_squares(sizes: &[u64], extra: u64) -> u64 {
    let mut buf = [0u64; 64];
    let k = sizes.len();
    let s = &mut buf[..k];
    s.copy_from_slice(sizes);
    s.sort_unstable();
    let mut left = extra;
    let mut level = s[0];
    let mut count = 1usize;
    while count < k {
        let cost = (s[count] - level) * count as u64;
        if cost > left {
            break;
        }
        left -= cost;
        level = s[count];
        count += 1;
    }
    let q = left / count as u64;
    let rem = left % count as u64;
    let low = level + q;
    let tail: u64 = s[count..].iter().map(|x| x * x).sum();
    (count as u64 - rem) * low * low + rem * (low + 1) * (low + 1) + tail
}

#[derive(Clone)]
struct Partial {
    assignment: Vec<usize>,
    class_masks: Vec<u64>,
    /// Union of neighbourhoods of each class.
    blocked: Vec<u64>,
    sizes: Vec<u64>,
    used: usize,
    uncoloured: u64,
    remaining: u64,
}

impl Partial {
    fn root(n: usize, k: usize) -> Self {
        Self {
            assignment: vec![usize::MAX; n],
            class_masks: vec![0; k],
            blocked: vec![0; k],
            sizes: vec![0; k],
            used: 0,
            uncoloured: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
            remaining: n as u64,
        }
    }

    fn assign(&mut self, adj: &[u64], v: usize, c: usize) -> (u64, usize) {
        let undo = (self.blocked[c], self.used);
        self.assignment[v] = c;
        self.class_masks[c] |= 1u64 << v;
        self.blocked[c] |= adj[v];
        self.sizes[c] += 1;
        self.used = self.used.max(c + 1);
        self.uncoloured &= !(1u64 << v);
        self.remaining -= 1;
        undo
    }

    fn unassign(&mut self, v: usize, c: usize, undo: (u64, usize)) {
        self.assignment[v] = usize::MAX;
        self.class_masks[c] &= !(1u64 << v);
        self.blocked[c] = undo.0;
        self.sizes[c] -= 1;
        self.used = undo.1;
        self.uncoloured |= 1u64 << v;
        self.remaining += 1;
    }

    fn bound(&self) -> u64 {
        balanced_fill_sum_squares(&self.sizes, self.remaining)
    }

    /// Enough vertices left to open every unused class, and when all classes
    /// are open no uncoloured vertex is adjacent to every class.
    fn viable(&self, k: usize) -> bool {
        if self.remaining < (k - self.used) as u64 {
            return false;
        }
        if self.used < k {
            return true;
        }
        let dead = self.blocked.iter().fold(self.uncoloured, |m, b| m & b);
        dead == 0
    }

    fn sum_squares(&self) -> u64 {
        self.sizes.iter().map(|s| s * s).sum()
    }
}

pub(crate) struct Outcome {
    pub best: u64,
    pub exact: bool,
    /// Canonical optimal colourings in lexicographic order (one unless all were requested).
    pub witnesses: Vec<Vec<usize>>,
    pub explored: u64,
}

pub(crate) struct Search<'a> {
    adj: &'a [u64],
    k: usize,
    deadline: Option<Instant>,
    stop: AtomicBool,
    ticks: AtomicU64,
}

const TIME_CHECK_INTERVAL: u64 = 1 << 10;

impl<'a> Search<'a> {
    pub fn new(adj: &'a [u64], k: usize, deadline: Option<Instant>) -> Self {
        Self {
            adj,
            k,
            deadline,
            stop: AtomicBool::new(false),
            ticks: AtomicU64::new(0),
        }
    }

    fn out_of_time(&self) -> bool {
        if self.stop.load(Ordering::Relaxed) {
            return true;
        }
        if let Some(deadline) = self.deadline {
            let t = self.ticks.fetch_add(1, Ordering::Relaxed);
            if t % TIME_CHECK_INTERVAL == 0 && Instant::now() >= deadline {
                self.stop.store(true, Ordering::Relaxed);
                return true;
            }
        }
        false
    }

    /// Colour choices for the most saturated vertex: open classes by
    /// ascending size, then one fresh class.
    fn branches(&self, p: &Partial) -> (usize, Vec<usize>) {
        let (v, forbidden) = most_saturated(self.adj, &p.class_masks[..p.used], p.uncoloured);
        let mut colours: Vec<usize> = (0..p.used)
            .filter(|&c| forbidden & (1u64 << c) == 0)
            .collect();
        colours.sort_by_key(|&c| (p.sizes[c], c));
        if p.used < self.k {
            colours.push(p.used);
        }
        (v, colours)
    }

    fn saturation_dfs(&self, p: &mut Partial, best: &AtomicU64, incumbent: &Mutex<Option<(u64, Vec<usize>)>>) {
        if self.out_of_time() {
            return;
        }
        if p.bound() >= best.load(Ordering::Relaxed) {
            return;
        }
        if p.uncoloured == 0 {
            let value = p.sum_squares();
            let mut slot = incumbent.lock().expect("incumbent lock");
            if slot.as_ref().is_none_or(|(b, _)| value < *b) {
                *slot = Some((value, p.assignment.clone()));
            }
            best.fetch_min(value, Ordering::Relaxed);
            return;
        }
        let (v, colours) = self.branches(p);
        for c in colours {
            let undo = p.assign(self.adj, v, c);
            if p.viable(self.k) {
                self.saturation_dfs(p, best, incumbent);
            }
            p.unassign(v, c, undo);
        }
    }

    /// Expands the saturation tree breadth-first until there are at least
    /// `target` open subproblems (or nothing is left to expand).
    fn frontier(&self, target: usize) -> Vec<Partial> {
        let mut layer = vec![Partial::root(self.adj.len(), self.k)];
        while layer.len() < target {
            let mut next = Vec::new();
            let mut expanded = false;
            for p in layer {
                if p.uncoloured == 0 {
                    next.push(p);
                    continue;
                }
                expanded = true;
                let (v, colours) = self.branches(&p);
                for c in colours {
                    let mut child = p.clone();
                    child.assign(self.adj, v, c);
                    if child.viable(self.k) {
                        next.push(child);
                    }
                }
            }
            layer = next;
            if !expanded {
                break;
            }
        }
        layer
    }

    /// Pass 1: optimum sum of squares and an arbitrary colouring attaining it.
    fn optimum(&self, workers: usize) -> Option<(u64, Vec<usize>)> {
        let best = AtomicU64::new(u64::MAX);
        let incumbent = Mutex::new(None);
        if workers <= 1 {
            let mut root = Partial::root(self.adj.len(), self.k);
            self.saturation_dfs(&mut root, &best, &incumbent);
        } else {
            let frontier = self.frontier(workers * 8);
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .expect("thread pool");
            pool.install(|| {
                frontier.into_par_iter().for_each(|mut p| {
                    self.saturation_dfs(&mut p, &best, &incumbent);
                })
            });
        }
        incumbent.into_inner().expect("incumbent lock")
    }

    /// Pass 2: restricted-growth search in vertex order accepting only
    /// colourings whose sum of squares is at most `target`.
    fn lexicographic(&self, target: u64, collect_all: bool) -> (Vec<Vec<usize>>, u64) {
        let mut found = Vec::new();
        let mut explored = 0u64;
        let mut p = Partial::root(self.adj.len(), self.k);
        self.lex_dfs(0, &mut p, target, collect_all, &mut found, &mut explored);
        (found, explored)
    }

    fn lex_dfs(
        &self,
        v: usize,
        p: &mut Partial,
        target: u64,
        collect_all: bool,
        found: &mut Vec<Vec<usize>>,
        explored: &mut u64,
    ) -> bool {
        *explored += 1;
        if self.out_of_time() {
            return true;
        }
        if v == self.adj.len() {
            found.push(p.assignment.clone());
            return !collect_all;
        }
        let top = p.used.min(self.k - 1);
        for c in 0..=top {
            if p.class_masks[c] & self.adj[v] != 0 {
                continue;
            }
            let undo = p.assign(self.adj, v, c);
            let halt = p.viable(self.k)
                && p.bound() <= target
                && self.lex_dfs(v + 1, p, target, collect_all, found, explored);
            p.unassign(v, c, undo);
            if halt {
                return true;
            }
        }
        false
    }

    pub fn run(&self, workers: usize, collect_all: bool) -> Option<Outcome> {
        let (best, fallback) = self.optimum(workers)?;
        if self.stop.load(Ordering::Relaxed) {
            return Some(Outcome {
                best,
                exact: false,
                witnesses: vec![fallback],
                explored: 0,
            });
        }
        let (mut witnesses, explored) = self.lexicographic(best, collect_all);
        if witnesses.is_empty() {
            // Timed out in pass 2: the value is proven, the witness is not the least one.
            witnesses.push(fallback);
        }
        Some(Outcome {
            best,
            exact: true,
            witnesses,
            explored,
        })
    }
}
