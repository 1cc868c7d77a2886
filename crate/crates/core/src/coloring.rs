//! Proper colourings, the chromatic number, and canonical enumeration of
//! chromatic vertex partitions.

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// A vertex colouring in restricted-growth form: colour `i` first appears
/// before colour `i + 1`, so each vertex partition has one representative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Colouring {
    assignment: Vec<usize>,
    class_count: usize,
}

impl Colouring {
    /// Relabels colours by order of first occurrence.
    pub fn from_assignment(raw: &[usize]) -> Self {
        let mut relabel: Vec<Option<usize>> = Vec::new();
        let mut next = 0;
        let assignment = raw
            .iter()
            .map(|&c| {
                if c >= relabel.len() {
                    relabel.resize(c + 1, None);
                }
                *relabel[c].get_or_insert_with(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect();
        Self {
            assignment,
            class_count: next,
        }
    }

    /// Builds a colouring from explicit classes, which must partition `0..order`.
    pub fn from_classes(order: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut raw = vec![usize::MAX; order];
        for (c, class) in classes.iter().enumerate() {
            for &v in class {
                if v >= order {
                    return Err(Error::VertexOutOfRange { vertex: v, order });
                }
                if raw[v] != usize::MAX {
                    return Err(Error::Domain(format!("vertex {v} appears in two classes")));
                }
                raw[v] = c;
            }
        }
        if raw.contains(&usize::MAX) {
            return Err(Error::Domain("classes do not cover every vertex".into()));
        }
        Ok(Self::from_assignment(&raw))
    }

    /// Wraps an assignment already known to be in restricted-growth form.
    pub(crate) fn from_canonical(assignment: Vec<usize>, class_count: usize) -> Self {
        debug_assert_eq!(Self::from_assignment(&assignment).assignment, assignment);
        Self {
            assignment,
            class_count,
        }
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn colour(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn order(&self) -> usize {
        self.assignment.len()
    }

    /// θ: class sizes indexed by colour.
    pub fn theta(&self) -> Vec<u64> {
        let mut sizes = vec![0u64; self.class_count];
        for &c in &self.assignment {
            sizes[c] += 1;
        }
        sizes
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.class_count];
        for (v, &c) in self.assignment.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }
}

impl Serialize for Colouring {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Colouring", 1)?;
        s.serialize_field("classes", &self.classes())?;
        s.end()
    }
}

pub fn class_sizes(col: &Colouring) -> Vec<u64> {
    col.theta()
}

/// Monochromatic edges in lexicographic order; empty iff the colouring is proper.
pub fn bad_edges(g: &Graph, col: &Colouring) -> Result<Vec<Edge>> {
    if col.order() != g.order() {
        return Err(Error::LengthMismatch {
            expected: g.order(),
            found: col.order(),
        });
    }
    Ok(g
        .edges()
        .filter(|&(u, v)| col.colour(u) == col.colour(v))
        .collect())
}

/// Picks the uncoloured vertex with the most distinct neighbouring colours,
/// breaking ties by uncoloured degree and then by lowest index.
/// Returns the vertex and the mask of colours it cannot take.
pub(crate) fn most_saturated(adj: &[u64], class_masks: &[u64], uncoloured: u64) -> (usize, u64) {
    let mut best: Option<(u32, u32, usize, u64)> = None;
    let mut rest = uncoloured;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let forbidden = class_masks
            .iter()
            .enumerate()
            .filter(|(_, &m)| m & adj[v] != 0)
            .fold(0u64, |f, (c, _)| f | (1u64 << c));
        let sat = forbidden.count_ones();
        let deg = (adj[v] & uncoloured).count_ones();
        let better = match best {
            None => true,
            Some((bs, bd, _, _)) => (sat, deg) > (bs, bd),
        };
        if better {
            best = Some((sat, deg, v, forbidden));
        }
    }
    let (_, _, v, forbidden) = best.expect("at least one uncoloured vertex");
    (v, forbidden)
}

fn greedy_clique_size(adj: &[u64]) -> usize {
    let mut best = 1;
    for start in 0..adj.len() {
        let mut size = 1;
        let mut candidates = adj[start];
        while candidates != 0 {
            let mut pick = candidates.trailing_zeros() as usize;
            let mut pick_deg = 0;
            let mut rest = candidates;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let d = (adj[u] & candidates).count_ones();
                if d > pick_deg {
                    pick = u;
                    pick_deg = d;
                }
            }
            size += 1;
            candidates &= adj[pick];
        }
        best = best.max(size);
    }
    best
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Colour count of the DSATUR heuristic colouring.
fn dsatur_upper_bound(adj: &[u64]) -> usize {
    let mut class_masks: Vec<u64> = Vec::new();
    let mut uncoloured = full_mask(adj.len());
    while uncoloured != 0 {
        let (v, forbidden) = most_saturated(adj, &class_masks, uncoloured);
        let c = (!forbidden).trailing_zeros() as usize;
        if c == class_masks.len() {
            class_masks.push(0);
        }
        class_masks[c] |= 1u64 << v;
        uncoloured &= !(1u64 << v);
    }
    class_masks.len()
}

fn colourable(adj: &[u64], class_masks: &mut Vec<u64>, uncoloured: u64, k: usize) -> bool {
    if uncoloured == 0 {
        return true;
    }
    let (v, forbidden) = most_saturated(adj, class_masks, uncoloured);
    let used = class_masks.len();
    let bit = 1u64 << v;
    for c in 0..used {
        if forbidden & (1u64 << c) == 0 {
            class_masks[c] |= bit;
            let ok = colourable(adj, class_masks, uncoloured & !bit, k);
            class_masks[c] &= !bit;
            if ok {
                return true;
            }
        }
    }
    if used < k {
        class_masks.push(bit);
        let ok = colourable(adj, class_masks, uncoloured & !bit, k);
        class_masks.pop();
        if ok {
            return true;
        }
    }
    false
}

/// Exact chromatic number.
///
/// Deepens from a greedy clique lower bound to the DSATUR heuristic's colour
/// count, testing each candidate with saturation-ordered backtracking.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    let adj = g.adjacency_masks()?;
    if g.size() == 0 {
        return Ok(1);
    }
    let lower = greedy_clique_size(&adj);
    let upper = dsatur_upper_bound(&adj);
    let all = full_mask(adj.len());
    for k in lower..upper {
        if colourable(&adj, &mut Vec::with_capacity(k), all, k) {
            return Ok(k);
        }
    }
    Ok(upper)
}

/// Iterator over every partition of the vertex set into exactly `χ`
/// independent sets, as canonical colourings in lexicographic order.
pub struct ChromaticPartitions {
    adj: Vec<u64>,
    k: usize,
    assignment: Vec<usize>,
    class_masks: Vec<u64>,
    /// `prefix_used[i]`: colours used by vertices `0..i`.
    prefix_used: Vec<usize>,
    started: bool,
    done: bool,
}

impl ChromaticPartitions {
    fn new(adj: Vec<u64>, k: usize) -> Self {
        let n = adj.len();
        Self {
            adj,
            k,
            assignment: vec![0; n],
            class_masks: vec![0; k],
            prefix_used: vec![0; n + 1],
            started: false,
            done: false,
        }
    }

    pub fn class_count(&self) -> usize {
        self.k
    }

    fn unassign(&mut self, v: usize) {
        self.class_masks[self.assignment[v]] &= !(1u64 << v);
    }

    /// Smallest admissible colour `>= from` for vertex `v`.
    fn next_colour(&self, v: usize, from: usize) -> Option<usize> {
        let n = self.adj.len();
        let used = self.prefix_used[v];
        let top = used.min(self.k - 1);
        (from..=top).find(|&c| {
            let now_used = used.max(c + 1);
            self.class_masks[c] & self.adj[v] == 0 && n - v - 1 >= self.k - now_used
        })
    }
}

impl Iterator for ChromaticPartitions {
    type Item = Colouring;

    fn next(&mut self) -> Option<Colouring> {
        if self.done {
            return None;
        }
        let n = self.adj.len();
        let (mut v, mut from) = if self.started {
            let last = n - 1;
            self.unassign(last);
            (last, self.assignment[last] + 1)
        } else {
            self.started = true;
            (0, 0)
        };
        loop {
            match self.next_colour(v, from) {
                Some(c) => {
                    self.assignment[v] = c;
                    self.class_masks[c] |= 1u64 << v;
                    self.prefix_used[v + 1] = self.prefix_used[v].max(c + 1);
                    if v + 1 == n {
                        return Some(Colouring::from_canonical(self.assignment.clone(), self.k));
                    }
                    v += 1;
                    from = 0;
                }
                None => {
                    if v == 0 {
                        self.done = true;
                        return None;
                    }
                    v -= 1;
                    self.unassign(v);
                    from = self.assignment[v] + 1;
                }
            }
        }
    }
}

/// Streams all chromatic partitions of `g`, each exactly once.
pub fn enumerate_chromatic_partitions(g: &Graph) -> Result<ChromaticPartitions> {
    let k = chromatic_number(g)?;
    Ok(ChromaticPartitions::new(g.adjacency_masks()?, k))
}
