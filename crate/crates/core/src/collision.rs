//! Grouping graphs by path sequence to find non-isomorphic graphs that share
//! one.

use std::collections::BTreeMap;
use std::io::Write;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{
    are_isomorphic_small, is_connected, parse_graph6, write_graph6, Graph, ISOMORPHISM_MAX_N,
};
use crate::oracle::{path_sequence_dfs, path_sequence_dp, PathSequence, DFS_MAX_N, DP_MAX_N};

/// Largest `n` accepted by [`enumerate_labeled_graphs`] (`2^21` graphs).
pub const ENUMERATE_MAX_N: usize = 7;

/// Graphs handed to the worker pool at a time.
const BATCH: usize = 4096;

/// Every labeled simple graph on `n` vertices, ordered by edge mask. Bit `i`
/// of the mask is the `i`-th vertex pair in graph6 order:
/// `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn enumerate_labeled_graphs(n: usize) -> Result<LabeledGraphs> {
    if !(1..=ENUMERATE_MAX_N).contains(&n) {
        return Err(Error::UnsupportedSize {
            what: "labeled graph enumeration",
            n,
            max: ENUMERATE_MAX_N,
            hint: " (and at least 1)",
        });
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    Ok(LabeledGraphs {
        n,
        end: 1u64 << pairs.len(),
        pairs,
        next: 0,
    })
}

/// Iterator returned by [`enumerate_labeled_graphs`].
#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next == self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let edges = self
            .pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Some(Graph::from_edges(self.n, edges).expect("pairs are valid"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CollisionOptions {
    /// Drop disconnected graphs before grouping.
    pub connected_only: bool,
    /// Keep one graph per isomorphism class in each group, and report a
    /// group only if at least two classes remain. When off, every input
    /// graph is kept and any group with two or more members is reported.
    pub dedupe_isomorphic: bool,
}

impl Default for CollisionOptions {
    fn default() -> Self {
        CollisionOptions {
            connected_only: false,
            dedupe_isomorphic: true,
        }
    }
}

/// Graphs that share one path sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollisionRecord {
    pub sequence: PathSequence,
    /// graph6 encodings in input order.
    pub members: Vec<String>,
    /// Isomorphism class index per member, numbered by first appearance.
    /// `None` when the graphs are too large for the isomorphism test.
    pub iso_classes: Option<Vec<usize>>,
    pub connected: Vec<bool>,
}

impl CollisionRecord {
    pub fn class_count(&self) -> Option<usize> {
        self.iso_classes
            .as_ref()
            .map(|c| c.iter().max().map_or(0, |&m| m + 1))
    }
}

/// An input graph that was not grouped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkippedGraph {
    /// Zero-based position in the input stream.
    pub index: usize,
    pub reason: Error,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CollisionScan {
    /// Sorted by sequence.
    pub records: Vec<CollisionRecord>,
    pub skipped: Vec<SkippedGraph>,
    /// Graphs read from the source, including skipped ones.
    pub scanned: usize,
}

#[derive(Default)]
struct Group {
    members: Vec<String>,
    connected: Vec<bool>,
    representatives: Vec<Graph>,
}

fn oracle(g: &Graph) -> Result<PathSequence> {
    if g.vertex_count() <= DFS_MAX_N.min(10) {
        path_sequence_dfs(g)
    } else if g.vertex_count() <= DP_MAX_N {
        path_sequence_dp(g)
    } else {
        Err(Error::too_large(
            "collision search",
            g.vertex_count(),
            DP_MAX_N,
        ))
    }
}

/// Groups `source` by exact path sequence and returns the groups that hold
/// at least two non-isomorphic graphs (or two members when
/// `dedupe_isomorphic` is off).
///
/// Graphs over the oracle guard are skipped and listed in the result. Output
/// order depends only on the input.
pub fn find_collisions(
    source: impl IntoIterator<Item = Graph>,
    options: CollisionOptions,
) -> CollisionScan {
    let mut groups: BTreeMap<PathSequence, Group> = BTreeMap::new();
    let mut scan = CollisionScan::default();
    let mut source = source.into_iter().peekable();
    while source.peek().is_some() {
        let batch: Vec<Graph> = source.by_ref().take(BATCH).collect();
        let offset = scan.scanned;
        scan.scanned += batch.len();
        let computed: Vec<(Graph, bool, Option<Result<PathSequence>>)> = batch
            .into_par_iter()
            .map(|g| {
                let connected = is_connected(&g);
                let seq = (connected || !options.connected_only).then(|| oracle(&g));
                (g, connected, seq)
            })
            .collect();
        for (i, (g, connected, seq)) in computed.into_iter().enumerate() {
            let Some(seq) = seq else { continue };
            let seq = match seq {
                Ok(seq) => seq,
                Err(reason) => {
                    log::warn!("skipping graph {}: {reason}", offset + i);
                    scan.skipped.push(SkippedGraph {
                        index: offset + i,
                        reason,
                    });
                    continue;
                }
            };
            let group = groups.entry(seq).or_default();
            let partitionable = g.vertex_count() <= ISOMORPHISM_MAX_N;
            if options.dedupe_isomorphic && partitionable {
                let seen = group
                    .representatives
                    .iter()
                    .any(|r| are_isomorphic_small(r, &g).expect("size checked"));
                if seen {
                    continue;
                }
            }
            group
                .members
                .push(write_graph6(&g).expect("n within oracle guard"));
            group.connected.push(connected);
            if options.dedupe_isomorphic && partitionable {
                group.representatives.push(g);
            }
        }
    }

    for (sequence, group) in groups {
        if group.members.len() < 2 {
            continue;
        }
        let n = group
            .members
            .first()
            .map_or(0, |g6| parse_graph6(g6).map_or(0, |g| g.vertex_count()));
        let iso_classes = if n > ISOMORPHISM_MAX_N {
            None
        } else if options.dedupe_isomorphic {
            Some((0..group.members.len()).collect())
        } else {
            Some(partition(&group.members))
        };
        scan.records.push(CollisionRecord {
            sequence,
            members: group.members,
            iso_classes,
            connected: group.connected,
        });
    }
    if options.dedupe_isomorphic {
        scan.records
            .retain(|r| r.class_count().is_none_or(|c| c >= 2));
    }
    scan
}

fn partition(members: &[String]) -> Vec<usize> {
    let graphs: Vec<Graph> = members
        .iter()
        .map(|g6| parse_graph6(g6).expect("written by write_graph6"))
        .collect();
    let mut classes: Vec<usize> = Vec::with_capacity(graphs.len());
    let mut leaders: Vec<usize> = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        let class = leaders
            .iter()
            .position(|&l| are_isomorphic_small(&graphs[l], g).expect("size checked"));
        classes.push(class.unwrap_or_else(|| {
            leaders.push(i);
            leaders.len() - 1
        }));
    }
    classes
}

/// Renders one record as a report line, without the newline:
///
/// ```text
/// sequence=4,3,3 members=Cw,Cs classes=0,1 connected=0,1
/// ```
///
/// `classes=-` marks groups that were not partitioned.
pub fn format_record(record: &CollisionRecord) -> String {
    let join = |items: Vec<String>| items.join(",");
    let classes = match &record.iso_classes {
        Some(c) => join(c.iter().map(usize::to_string).collect()),
        None => "-".to_string(),
    };
    format!(
        "sequence={} members={} classes={} connected={}",
        record.sequence,
        record.members.join(","),
        classes,
        join(
            record
                .connected
                .iter()
                .map(|&c| u8::from(c).to_string())
                .collect()
        )
    )
}

/// Writes one line per record. On a write failure the error reports how
/// many complete lines were written before it.
pub fn write_collision_report(records: &[CollisionRecord], sink: &mut dyn Write) -> Result<()> {
    let fail = |written: usize, e: std::io::Error| Error::Report {
        written,
        reason: e.to_string(),
    };
    for (written, record) in records.iter().enumerate() {
        writeln!(sink, "{}", format_record(record)).map_err(|e| fail(written, e))?;
    }
    sink.flush().map_err(|e| fail(records.len(), e))
}
