//! Undirected simple graphs stored as adjacency rows of vertex bitsets,
//! plus graph6 / edge-list serialization and a few small-graph utilities.

use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

/// Largest vertex count representable in short-form graph6.
pub const GRAPH6_MAX_N: usize = 62;

/// Largest vertex count accepted by [`are_isomorphic_small`].
pub const ISOMORPHISM_MAX_N: usize = 10;

/// A set of vertex indices, stored as a chain of 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    /// An empty set with room for `capacity` vertices.
    pub fn with_capacity(capacity: usize) -> Self {
        VertexSet {
            words: vec![0; capacity.div_ceil(WORD_BITS)],
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / WORD_BITS)
            .is_some_and(|w| w >> (v % WORD_BITS) & 1 == 1)
    }

    pub fn insert(&mut self, v: usize) {
        let word = v / WORD_BITS;
        if word >= self.words.len() {
            self.words.resize(word + 1, 0);
        }
        self.words[word] |= 1 << (v % WORD_BITS);
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD_BITS + bit)
            })
        })
    }

    /// The low word, for graphs known to fit in a single machine word.
    pub(crate) fn low_word(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Undirected simple graph on vertices `0..n`.
///
/// Values are immutable once built; every constructor enforces symmetry,
/// absence of loops and that no bit at or above `n` is set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::with_capacity(n); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidGraph(format!(
                "edge ({u}, {v}) out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Degree sequence sorted in nonincreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Adjacency rows as single words. Only valid for `n <= 64`.
    pub(crate) fn adjacency_words(&self) -> Vec<u64> {
        debug_assert!(self.n <= WORD_BITS);
        self.adj.iter().map(VertexSet::low_word).collect()
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Graph::from_edges(self.n + other.n, edges).expect("union of valid graphs is valid")
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n
            || perm
                .iter()
                .any(|&p| p >= self.n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::InvalidGraph(
                "relabeling is not a permutation".into(),
            ));
        }
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// Parses one short-form graph6 record. Surrounding whitespace is ignored.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim().as_bytes();
    let err = |offset: usize, reason: &str| Error::Graph6 {
        offset,
        reason: reason.to_string(),
    };
    let (&header, body) = bytes.split_first().ok_or_else(|| err(0, "empty record"))?;
    if header == b'~' {
        return Err(err(0, "long-form header (n > 62) is not supported"));
    }
    if !(63..=126).contains(&header) {
        return Err(err(0, "character outside [63, 126]"));
    }
    let n = (header - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if let Some(pos) = body.iter().position(|c| !(63..=126).contains(c)) {
        return Err(err(pos + 1, "character outside [63, 126]"));
    }
    if body.len() < expected {
        return Err(err(bytes.len(), "truncated bit section"));
    }
    if body.len() > expected {
        return Err(err(1 + expected, "trailing data after bit section"));
    }

    let mut g = Graph::empty(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let chunk = body[k / 6] - 63;
            if chunk >> (5 - k % 6) & 1 == 1 {
                g.insert_edge(u, v)?;
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = body[k / 6] - 63;
        if last & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(err(1 + k / 6, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Encodes `g` as a short-form graph6 record (no trailing newline).
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    if n > GRAPH6_MAX_N {
        return Err(Error::too_large("short-form graph6", n, GRAPH6_MAX_N));
    }
    let mut out = String::with_capacity(1 + (n * n).div_ceil(12));
    out.push((n as u8 + 63) as char);
    let mut chunk = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            chunk = chunk << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Parses an edge list: the first token is `n`, the remaining tokens pair up
/// into edges `u v`. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut tokens = text.lines().enumerate().flat_map(|(i, line)| {
        let content = line.split('#').next().unwrap_or("");
        content.split_whitespace().map(move |tok| (i + 1, tok))
    });
    let parse = |line: usize, tok: &str| -> Result<usize> {
        tok.parse().map_err(|_| Error::EdgeList {
            line,
            reason: format!("expected a nonnegative integer, found {tok:?}"),
        })
    };
    let (line, tok) = tokens.next().ok_or(Error::EdgeList {
        line: 1,
        reason: "missing vertex count".into(),
    })?;
    let n = parse(line, tok)?;
    let mut g = Graph::empty(n);
    while let Some((line_u, tok_u)) = tokens.next() {
        let u = parse(line_u, tok_u)?;
        let (line_v, tok_v) = tokens.next().ok_or(Error::EdgeList {
            line: line_u,
            reason: "odd number of endpoint tokens".into(),
        })?;
        let v = parse(line_v, tok_v)?;
        if u >= n || v >= n {
            return Err(Error::EdgeList {
                line: line_v,
                reason: format!("vertex out of range in edge ({u}, {v}) for n = {n}"),
            });
        }
        if u == v {
            return Err(Error::EdgeList {
                line: line_v,
                reason: format!("self-loop at vertex {u}"),
            });
        }
        g.insert_edge(u, v)?;
    }
    Ok(g)
}

/// Writes `n` on the first line and one `u v` edge (u < v) per line.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// True iff `g` has a single connected component. Graphs with at most one
/// vertex (including the empty graph) count as connected.
pub fn is_connected(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n <= 1 {
        return true;
    }
    let mut seen = VertexSet::with_capacity(n);
    let mut stack = vec![0];
    seen.insert(0);
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for u in g.neighbors(v).iter() {
            if !seen.contains(u) {
                seen.insert(u);
                reached += 1;
                stack.push(u);
            }
        }
    }
    reached == n
}

/// Decides isomorphism of two small graphs by backtracking over vertex
/// bijections, only pairing vertices of equal degree.
///
/// Graphs with different vertex counts are simply not isomorphic; vertex
/// counts above [`ISOMORPHISM_MAX_N`] are rejected.
pub fn are_isomorphic_small(g1: &Graph, g2: &Graph) -> Result<bool> {
    let n = g1.vertex_count();
    if n != g2.vertex_count() {
        return Ok(false);
    }
    if n > ISOMORPHISM_MAX_N {
        return Err(Error::too_large("isomorphism search", n, ISOMORPHISM_MAX_N));
    }
    if g1.edge_count() != g2.edge_count() || g1.degree_sequence() != g2.degree_sequence() {
        return Ok(false);
    }

    // Map high-degree vertices first: they constrain the search most.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g1.degree(v)));
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend_mapping(g1, g2, &order, 0, &mut image, &mut used))
}

fn extend_mapping(
    g1: &Graph,
    g2: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..g2.vertex_count() {
        if used[w] || g1.degree(v) != g2.degree(w) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g1.has_edge(u, v) == g2.has_edge(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend_mapping(g1, g2, order, depth + 1, image, used) {
            return true;
        }
        used[w] = false;
    }
    image[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn claw() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn triangle_plus_isolated() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn graph6_known_records() {
        assert_eq!(parse_graph6("C~").unwrap(), k4());
        assert_eq!(parse_graph6("Cs").unwrap(), claw());
        let single = parse_graph6("@").unwrap();
        assert_eq!(single.vertex_count(), 1);
        assert_eq!(single.edge_count(), 0);

        assert_eq!(write_graph6(&k4()).unwrap(), "C~");
        let path = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(write_graph6(&path).unwrap(), "Ch");
        assert_eq!(write_graph6(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(write_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(write_graph6(&triangle_plus_isolated()).unwrap(), "Cw");
    }

    #[test]
    fn graph6_errors_name_offsets() {
        assert!(matches!(
            parse_graph6(""),
            Err(Error::Graph6 { offset: 0, .. })
        ));
        assert!(matches!(
            parse_graph6("~?@A"),
            Err(Error::Graph6 { offset: 0, .. })
        ));
        assert!(matches!(
            parse_graph6("C"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph6("C~~"),
            Err(Error::Graph6 { offset: 2, .. })
        ));
        assert!(matches!(
            parse_graph6("D a"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        // "A" = 2 vertices, one bit; 'o' = 63 + 0b110000 sets a padding bit.
        assert!(matches!(
            parse_graph6("Ao"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert_eq!(parse_graph6("A_").unwrap().edge_count(), 1);
        assert_eq!(parse_graph6("Bo").unwrap().edge_count(), 2);
    }

    #[test]
    fn graph6_rejects_too_many_vertices() {
        let g = Graph::empty(63);
        assert!(matches!(
            write_graph6(&g),
            Err(Error::UnsupportedSize { .. })
        ));
    }

    #[test]
    fn edge_list_parsing() {
        let tri = parse_edge_list("3\n0 1\n1 2\n2 0").unwrap();
        assert_eq!(tri.edge_count(), 3);
        assert!(tri.has_edge(0, 2));
        assert_eq!(parse_edge_list("4\n0 1\n0 2\n0 3").unwrap(), claw());
        assert_eq!(parse_edge_list("3\n0 1\n1 0\n").unwrap().edge_count(), 1);

        let err = parse_edge_list("2\n0 0").unwrap_err();
        assert!(
            matches!(&err, Error::EdgeList { line: 2, reason } if reason.contains("self-loop"))
        );
        assert!(matches!(
            parse_edge_list("3\n0 5"),
            Err(Error::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3\n0 1\n2"),
            Err(Error::EdgeList { line: 3, .. })
        ));
        assert!(matches!(
            parse_edge_list(""),
            Err(Error::EdgeList { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("3\n0 x"),
            Err(Error::EdgeList { line: 2, .. })
        ));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = k4().disjoint_union(&claw());
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn connectivity() {
        assert!(is_connected(&claw()));
        assert!(!is_connected(&triangle_plus_isolated()));
        assert!(is_connected(&Graph::empty(0)));
        assert!(is_connected(&Graph::empty(1)));
        assert!(!is_connected(&Graph::empty(2)));
    }

    #[test]
    fn small_isomorphism() {
        let star_at_3 = Graph::from_edges(4, [(3, 0), (3, 1), (3, 2)]).unwrap();
        assert!(are_isomorphic_small(&claw(), &star_at_3).unwrap());
        assert!(!are_isomorphic_small(&claw(), &triangle_plus_isolated()).unwrap());
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(!are_isomorphic_small(&c4, &p4).unwrap());
        assert!(!are_isomorphic_small(&claw(), &Graph::empty(3)).unwrap());
        assert!(are_isomorphic_small(&Graph::empty(11), &Graph::empty(11)).is_err());
    }

    #[test]
    fn isomorphism_same_degrees_different_structure() {
        // Two 6-vertex 2-regular graphs: C6 versus two triangles.
        let c6 = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let two_triangles =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!are_isomorphic_small(&c6, &two_triangles).unwrap());
        let shuffled = c6.relabel(&[3, 0, 5, 1, 4, 2]).unwrap();
        assert!(are_isomorphic_small(&c6, &shuffled).unwrap());
    }

    #[test]
    fn constructors_reject_bad_edges() {
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(claw().relabel(&[0, 0, 1, 2]).is_err());
    }

    #[test]
    fn vertex_set_spans_words() {
        let mut s = VertexSet::with_capacity(10);
        s.insert(3);
        s.insert(70);
        s.insert(130);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 70, 130]);
        assert!(s.contains(70));
        assert!(!s.contains(71));
        assert_eq!(s.len(), 3);
    }
}
