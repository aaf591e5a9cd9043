//! Exact, formula-free path counting.
//!
//! Two independent counters produce the path sequence of an arbitrary graph:
//!
//! * [`path_sequence_dfs`] enumerates every simple path once, keeping only
//!   the traversal whose first endpoint has the smaller label.
//! * [`path_sequence_dp`] counts directed paths by vertex set and endpoint,
//!   one subset size at a time, and halves the totals.
//!
//! [`classify_starlike_paths`] enumerates the paths of a starlike tree and
//! buckets them by where the center sits on the path.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Vertex-count guard for [`path_sequence_dfs`].
pub const DFS_MAX_N: usize = 14;
/// Vertex-count guard for [`path_sequence_dp`]; states are (subset, endpoint).
pub const DP_MAX_N: usize = 24;

/// `(P_0, P_1, ..., P_rho)`: `P_h` is the number of simple paths with `h`
/// edges. `P_0` is the vertex count and `P_1` the edge count.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathSequence {
    counts: Vec<BigUint>,
}

impl PathSequence {
    /// Wraps raw counts, dropping trailing zeros beyond `P_0`.
    pub fn from_counts(mut counts: Vec<BigUint>) -> Self {
        while counts.len() > 1 && counts.last().is_some_and(Zero::is_zero) {
            counts.pop();
        }
        if counts.is_empty() {
            counts.push(BigUint::zero());
        }
        PathSequence { counts }
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// `P_h`, which is zero for every `h > rho`.
    pub fn get(&self, h: usize) -> BigUint {
        self.counts.get(h).cloned().unwrap_or_default()
    }

    /// Length of a longest path: the index of the last entry.
    pub fn rho(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn vertex_count(&self) -> BigUint {
        self.counts[0].clone()
    }

    /// Checks the shape required of any graph's path sequence: `P_0 >= 1`,
    /// nonzero last entry, and `P_1 <= P_0 (P_0 - 1) / 2`.
    pub fn validate(&self) -> Result<()> {
        let n = &self.counts[0];
        if n.is_zero() {
            return Err(Error::InvalidSequence("P_0 must be at least 1".into()));
        }
        if self.counts.last().is_some_and(Zero::is_zero) {
            return Err(Error::InvalidSequence("last entry must be nonzero".into()));
        }
        if let Some(p1) = self.counts.get(1) {
            let max_edges = n * (n - 1u32) / 2u32;
            if *p1 > max_edges {
                return Err(Error::InvalidSequence(format!(
                    "P_1 = {p1} exceeds the edge count of K_{n}"
                )));
            }
        }
        if self.counts.len() > 1 {
            if let Some(n) = n.to_usize() {
                if self.rho() >= n {
                    return Err(Error::InvalidSequence(format!(
                        "a path on {n} vertices has at most {} edges",
                        n - 1
                    )));
                }
            }
        }
        Ok(())
    }
}

impl From<Vec<u64>> for PathSequence {
    fn from(counts: Vec<u64>) -> Self {
        PathSequence::from_counts(counts.into_iter().map(BigUint::from).collect())
    }
}

impl fmt::Display for PathSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PathSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for PathSequence {
    type Err = Error;

    /// Parses comma-separated decimals, optionally wrapped in parentheses.
    /// Trailing zeros are not allowed: they would misstate the longest path.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let counts = inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<BigUint>()
                    .map_err(|_| Error::InvalidSequence(format!("bad entry {:?}", tok.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        if counts.len() > 1 && counts.last().is_some_and(Zero::is_zero) {
            return Err(Error::InvalidSequence("trailing zero entries".into()));
        }
        Ok(PathSequence { counts })
    }
}

/// Path sequence by exhaustive enumeration of simple paths.
pub fn path_sequence_dfs(g: &Graph) -> Result<PathSequence> {
    let n = g.vertex_count();
    if n > DFS_MAX_N {
        return Err(Error::UnsupportedSize {
            what: "DFS path enumeration",
            n,
            max: DFS_MAX_N,
            hint: "; use the subset DP oracle instead",
        });
    }
    let adj = g.adjacency_words();
    let mut counts = vec![0u64; n.max(1)];
    counts[0] = n as u64;
    for start in 0..n {
        extend_from(&adj, start, start, 1 << start, 0, &mut counts);
    }
    let seq = PathSequence::from(counts);
    debug_assert_prefix(g, &seq);
    Ok(seq)
}

fn extend_from(
    adj: &[u64],
    start: usize,
    end: usize,
    visited: u64,
    len: usize,
    counts: &mut [u64],
) {
    let mut frontier = adj[end] & !visited;
    while frontier != 0 {
        let next = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        if next > start {
            counts[len + 1] += 1;
        }
        extend_from(adj, start, next, visited | 1 << next, len + 1, counts);
    }
}

/// Path sequence by dynamic programming over (vertex set, endpoint).
///
/// `f[S][v]` counts directed simple paths whose vertex set is exactly `S` and
/// which end at `v`. Layers are built by subset size and only two are alive
/// at once. Within a layer, subsets are addressed by their colex rank and
/// entries by the position of `v` inside `S`, so a layer of size `k` holds
/// `C(n, k) * k` counters. The layer is computed in parallel; the result
/// does not depend on the number of workers.
///
/// Per-state counts are bounded by `(n - 1)!` and layer totals by `n!`, both
/// below `2^128` for `n <= 24`; additions are checked regardless.
pub fn path_sequence_dp(g: &Graph) -> Result<PathSequence> {
    let n = g.vertex_count();
    if n > DP_MAX_N {
        return Err(Error::too_large("subset DP path counting", n, DP_MAX_N));
    }
    if n == 0 {
        return Ok(PathSequence::from_counts(vec![BigUint::zero()]));
    }
    let adj = g.adjacency_words();
    let binom = binomial_table(n);

    let mut totals = vec![BigUint::from(n)];
    // Size-1 layer: one trivial path per vertex.
    let mut layer: Vec<u128> = vec![1; n];
    for size in 2..=n {
        let next = next_layer(&adj, &binom, n, size, &layer);
        let directed = next.par_iter().copied().reduce(
            || 0u128,
            |a, b| a.checked_add(b).expect("path count exceeds u128"),
        );
        if directed == 0 {
            break;
        }
        totals.push(BigUint::from(directed / 2));
        layer = next;
    }
    let seq = PathSequence::from_counts(totals);
    debug_assert_prefix(g, &seq);
    Ok(seq)
}

/// Length of a longest path (0 for edgeless graphs).
pub fn longest_path_length(g: &Graph) -> Result<usize> {
    Ok(path_sequence_dp(g)?.rho())
}

fn binomial_table(n: usize) -> Vec<Vec<usize>> {
    let mut c = vec![vec![0usize; n + 2]; n + 1];
    for i in 0..=n {
        c[i][0] = 1;
        for j in 1..=i {
            c[i][j] = c[i - 1][j - 1] + if j < i { c[i - 1][j] } else { 0 };
        }
    }
    c
}

/// Colex rank of a `k`-subset among all `k`-subsets of `0..n`.
fn colex_rank(binom: &[Vec<usize>], mut set: u64) -> usize {
    let mut rank = 0;
    let mut i = 1;
    while set != 0 {
        let b = set.trailing_zeros() as usize;
        set &= set - 1;
        rank += binom[b][i];
        i += 1;
    }
    rank
}

/// The `k`-subset of colex rank `rank`.
fn colex_unrank(binom: &[Vec<usize>], n: usize, k: usize, mut rank: usize) -> u64 {
    let mut set = 0u64;
    let mut top = n;
    for i in (1..=k).rev() {
        let mut b = top - 1;
        while binom[b][i] > rank {
            b -= 1;
        }
        rank -= binom[b][i];
        set |= 1 << b;
        top = b;
    }
    set
}

/// Next subset with the same popcount (Gosper's hack).
fn next_same_popcount(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

const CHUNK_SUBSETS: usize = 1024;

/// Pull step: `f[S][v] = sum over neighbors u of v in S \ {v} of f[S \ {v}][u]`.
fn next_layer(
    adj: &[u64],
    binom: &[Vec<usize>],
    n: usize,
    size: usize,
    prev: &[u128],
) -> Vec<u128> {
    let subsets = binom[n][size];
    let mut out = vec![0u128; subsets * size];
    out.par_chunks_mut(CHUNK_SUBSETS * size)
        .enumerate()
        .for_each(|(chunk, slots)| {
            let first = chunk * CHUNK_SUBSETS;
            let mut set = colex_unrank(binom, n, size, first);
            let mut members = [0usize; 64];
            for (offset, row) in slots.chunks_mut(size).enumerate() {
                debug_assert_eq!(colex_rank(binom, set), first + offset);
                let mut bits = set;
                for m in members.iter_mut().take(size) {
                    *m = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                }
                for (pos, slot) in row.iter_mut().enumerate() {
                    let v = members[pos];
                    let rest = set & !(1 << v);
                    let base = colex_rank(binom, rest) * (size - 1);
                    let mut sum = 0u128;
                    let mut preds = adj[v] & rest;
                    while preds != 0 {
                        let u = preds.trailing_zeros() as usize;
                        preds &= preds - 1;
                        // Position of u within `rest` = number of members below it.
                        let upos = (rest & ((1u64 << u) - 1)).count_ones() as usize;
                        sum = sum
                            .checked_add(prev[base + upos])
                            .expect("path count exceeds u128");
                    }
                    *slot = sum;
                }
                if first + offset + 1 < subsets {
                    set = next_same_popcount(set);
                }
            }
        });
    out
}

#[inline]
fn debug_assert_prefix(g: &Graph, seq: &PathSequence) {
    debug_assert_eq!(seq.get(0), BigUint::from(g.vertex_count()));
    if g.vertex_count() > 0 {
        debug_assert_eq!(seq.get(1), BigUint::from(g.edge_count()));
    }
}

/// Counts of the paths of one length in a starlike tree, split by where the
/// center `c` lies on the path.
///
/// * `x1`, `x2`: `c` is an end vertex; the other end is a leaf (`x1`) or an
///   inner branch vertex (`x2`).
/// * `y1`, `y2`: `c` is not on the path; neither end is a leaf (`y1`), or one
///   end is (`y2`).
/// * `z1[a]`: `c` is interior, exactly one end is a leaf, at distance `a + 1`
///   from `c`; `a` in `0..=h-2`.
/// * `z2[a]`: `c` is interior, both ends are leaves, the nearer at distance
///   `a + 1`; `a` in `0..h/2` (integer division).
/// * `z3[a - 1]`: `c` is interior, neither end is a leaf, the nearer at
///   distance `a`; `a` in `1..=h/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathTypeCounts {
    pub h: usize,
    pub x1: BigUint,
    pub x2: BigUint,
    pub y1: BigUint,
    pub y2: BigUint,
    pub z1: Vec<BigUint>,
    pub z2: Vec<BigUint>,
    pub z3: Vec<BigUint>,
}

impl PathTypeCounts {
    /// All buckets zero, with the array lengths `h` dictates.
    pub fn zeroed(h: usize) -> Self {
        PathTypeCounts {
            h,
            x1: BigUint::zero(),
            x2: BigUint::zero(),
            y1: BigUint::zero(),
            y2: BigUint::zero(),
            z1: vec![BigUint::zero(); h.saturating_sub(1)],
            z2: vec![BigUint::zero(); h / 2],
            z3: vec![BigUint::zero(); h / 2],
        }
    }

    /// `z3` bucket for offset `a` (`1 <= a <= h/2`).
    pub fn z3_at(&self, a: usize) -> &BigUint {
        &self.z3[a - 1]
    }

    pub fn total(&self) -> BigUint {
        let scalars = [&self.x1, &self.x2, &self.y1, &self.y2];
        scalars
            .into_iter()
            .chain(&self.z1)
            .chain(&self.z2)
            .chain(&self.z3)
            .sum()
    }
}

/// Enumerates every path of length `h` in the starlike tree `g` and buckets
/// it by the position of `center` (see [`PathTypeCounts`]).
///
/// `g` must be a tree in which every vertex other than `center` has degree
/// at most 2. Centers of degree below 3 are accepted; the buckets are still
/// well defined by position.
pub fn classify_starlike_paths(g: &Graph, center: usize, h: usize) -> Result<PathTypeCounts> {
    let n = g.vertex_count();
    let fail = |reason: String| Error::Classification { center, reason };
    if n > DFS_MAX_N {
        return Err(Error::too_large(
            "starlike path classification",
            n,
            DFS_MAX_N,
        ));
    }
    if center >= n {
        return Err(fail(format!("center out of range for {n} vertices")));
    }
    if h == 0 {
        return Err(fail("path length must be at least 1".into()));
    }
    if g.edge_count() + 1 != n || !crate::graph::is_connected(g) {
        return Err(fail("graph is not a tree".into()));
    }
    if let Some(v) = (0..n).find(|&v| v != center && g.degree(v) > 2) {
        return Err(fail(format!("vertex {v} has degree {} > 2", g.degree(v))));
    }

    let is_leaf = |v: usize| v != center && g.degree(v) == 1;
    let mut counts = PathTypeCounts::zeroed(h);
    let one = BigUint::from(1u32);
    for path in simple_paths(g, h) {
        let (a, b) = (path[0], path[h]);
        match path.iter().position(|&v| v == center) {
            Some(0) => bump(
                if is_leaf(b) {
                    &mut counts.x1
                } else {
                    &mut counts.x2
                },
                &one,
            ),
            Some(p) if p == h => bump(
                if is_leaf(a) {
                    &mut counts.x1
                } else {
                    &mut counts.x2
                },
                &one,
            ),
            None => bump(
                if is_leaf(a) || is_leaf(b) {
                    &mut counts.y2
                } else {
                    &mut counts.y1
                },
                &one,
            ),
            Some(p) => {
                let (da, db) = (p, h - p);
                match (is_leaf(a), is_leaf(b)) {
                    (true, false) => bump(&mut counts.z1[da - 1], &one),
                    (false, true) => bump(&mut counts.z1[db - 1], &one),
                    (true, true) => bump(&mut counts.z2[da.min(db) - 1], &one),
                    (false, false) => bump(&mut counts.z3[da.min(db) - 1], &one),
                }
            }
        }
    }
    Ok(counts)
}

fn bump(slot: &mut BigUint, by: &BigUint) {
    *slot += by;
}

/// Every simple path with `h` edges, each listed once (first endpoint has the
/// smaller label).
fn simple_paths(g: &Graph, h: usize) -> Vec<Vec<usize>> {
    fn walk(g: &Graph, h: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if path.len() == h + 1 {
            if path[0] < path[h] {
                out.push(path.clone());
            }
            return;
        }
        let end = *path.last().unwrap();
        for next in g.neighbors(end).iter() {
            if !path.contains(&next) {
                path.push(next);
                walk(g, h, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for start in 0..g.vertex_count() {
        walk(g, h, &mut vec![start], &mut out);
    }
    out
}
