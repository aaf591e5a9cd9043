//! Graph families with closed-form path counts, and their constructors.
//!
//! Labeling is fixed so that built graphs serialize identically across runs:
//!
//! * `Complete`: vertices `0..n`, all adjacent.
//! * `CompleteBipartite`: parts `0..n1` and `n1..n1+n2`.
//! * `Path`: `0 - 1 - ... - (n-1)`; `Cycle` adds the edge `(n-1) - 0`.
//! * `Star`, `Starlike`, `GeneralizedStarlike`: the center (coalescence vertex)
//!   is `0`. For generalized starlike trees the clique occupies `0..n1`.
//!   Branches follow, laid out in nondecreasing length order, each as a path
//!   leaving the center.
//! * `Kite`, `Lollipop`: the clique or cycle occupies `0..n1` with the
//!   attachment vertex at `0`; the pendant path continues `n1, n1+1, ...`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Branch-length multiplicities `(L_1, ..., L_t)` of a starlike tree, where
/// `L_l` is the number of branches of length `l`.
///
/// Canonical form: at least one entry, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BranchSequence {
    counts: Vec<usize>,
}

impl BranchSequence {
    /// From multiplicities `(L_1, ..., L_t)`.
    pub fn new(counts: Vec<usize>) -> Result<Self> {
        match counts.last() {
            None => Err(Error::InvalidSpec(
                "branch sequence must be nonempty".into(),
            )),
            Some(0) => Err(Error::InvalidSpec(
                "branch sequence must not end in zero (L_t >= 1)".into(),
            )),
            Some(_) => Ok(BranchSequence { counts }),
        }
    }

    /// From a multiset of branch lengths, e.g. `[1, 1, 2]` gives `(2, 1)`.
    pub fn from_lengths(lengths: &[usize]) -> Result<Self> {
        if lengths.contains(&0) {
            return Err(Error::InvalidSpec("branch lengths must be positive".into()));
        }
        let t = lengths.iter().copied().max().unwrap_or(0);
        let mut counts = vec![0; t];
        for &l in lengths {
            counts[l - 1] += 1;
        }
        BranchSequence::new(counts)
    }

    /// `L_l`; zero for `l = 0` and for `l > t`.
    pub fn get(&self, l: usize) -> usize {
        if l == 0 {
            0
        } else {
            self.counts.get(l - 1).copied().unwrap_or(0)
        }
    }

    /// The multiplicities `(L_1, ..., L_t)`.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Number of branches, i.e. the degree `m` of the center.
    pub fn branch_count(&self) -> usize {
        self.counts.iter().sum()
    }

    /// `1 + sum(l * L_l)`.
    pub fn vertex_count(&self) -> usize {
        1 + self
            .counts
            .iter()
            .enumerate()
            .map(|(i, &c)| (i + 1) * c)
            .sum::<usize>()
    }

    /// Branch lengths in nondecreasing order.
    pub fn lengths(&self) -> Vec<usize> {
        self.counts
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| std::iter::repeat_n(i + 1, c))
            .collect()
    }

    /// Length of a longest branch (`t_1`).
    pub fn longest(&self) -> usize {
        self.counts.len()
    }

    /// Length of a longest branch once one longest branch is removed (`t_2`);
    /// zero when there is a single branch.
    pub fn second_longest(&self) -> usize {
        let lengths = self.lengths();
        lengths.len().checked_sub(2).map_or(0, |i| lengths[i])
    }
}

impl fmt::Display for BranchSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for BranchSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{self}")
    }
}

impl FromStr for BranchSequence {
    type Err = Error;

    /// Parses `"2,1"` or `"(2,1)"` as `(L_1, L_2) = (2, 1)`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let counts = inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidSpec(format!("bad branch multiplicity {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        BranchSequence::new(counts)
    }
}

/// All branch sequences describing a tree on exactly `vertex_count` vertices,
/// i.e. all partitions of `vertex_count - 1` into branch lengths, in
/// lexicographic order of their multiplicity vectors read from `L_t` down.
pub fn branch_sequences(vertex_count: usize) -> Vec<BranchSequence> {
    fn partitions(
        rest: usize,
        max_part: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if rest == 0 {
            out.push(current.clone());
            return;
        }
        for part in (1..=rest.min(max_part)).rev() {
            current.push(part);
            partitions(rest - part, part, current, out);
            current.pop();
        }
    }
    if vertex_count < 2 {
        return Vec::new();
    }
    let mut raw = Vec::new();
    partitions(
        vertex_count - 1,
        vertex_count - 1,
        &mut Vec::new(),
        &mut raw,
    );
    raw.iter()
        .map(|lengths| BranchSequence::from_lengths(lengths).expect("partition parts are positive"))
        .collect()
}

/// The family a [`FamilySpec`] belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    Complete,
    CompleteBipartite,
    Path,
    Cycle,
    Star,
    Starlike,
    Kite,
    Lollipop,
    GeneralizedStarlike,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 9] = [
        FamilyKind::Complete,
        FamilyKind::CompleteBipartite,
        FamilyKind::Path,
        FamilyKind::Cycle,
        FamilyKind::Star,
        FamilyKind::Starlike,
        FamilyKind::Kite,
        FamilyKind::Lollipop,
        FamilyKind::GeneralizedStarlike,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Complete => "complete",
            FamilyKind::CompleteBipartite => "complete-bipartite",
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Star => "star",
            FamilyKind::Starlike => "starlike",
            FamilyKind::Kite => "kite",
            FamilyKind::Lollipop => "lollipop",
            FamilyKind::GeneralizedStarlike => "genstar",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "complete" => FamilyKind::Complete,
            "complete-bipartite" | "bipartite" => FamilyKind::CompleteBipartite,
            "path" => FamilyKind::Path,
            "cycle" => FamilyKind::Cycle,
            "star" => FamilyKind::Star,
            "starlike" => FamilyKind::Starlike,
            "kite" => FamilyKind::Kite,
            "lollipop" => FamilyKind::Lollipop,
            "genstar" | "generalized-starlike" => FamilyKind::GeneralizedStarlike,
            other => return Err(Error::InvalidSpec(format!("unknown family {other:?}"))),
        })
    }
}

/// Parameters of one member of a family.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    /// `K_n`, `n >= 1`.
    Complete { n: usize },
    /// `K_{n1,n2}` with `1 <= n1 <= n2`.
    CompleteBipartite { n1: usize, n2: usize },
    /// `P_n`, `n >= 1`.
    Path { n: usize },
    /// `C_n`, `n >= 3`.
    Cycle { n: usize },
    /// `K_{1,n-1}`, `n >= 3`.
    Star { n: usize },
    /// Starlike tree with center degree `m >= 3`.
    Starlike { branches: BranchSequence },
    /// `K_{n1}` with a pendant path of `n2` vertices sharing one clique vertex.
    Kite { n1: usize, n2: usize },
    /// `C_{n1}` with a pendant path of `n2` vertices sharing one cycle vertex.
    Lollipop { n1: usize, n2: usize },
    /// `K_{n1}` coalesced at one vertex with the root of a starlike tree.
    GeneralizedStarlike { n1: usize, branches: BranchSequence },
}

impl FamilySpec {
    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::Complete { .. } => FamilyKind::Complete,
            FamilySpec::CompleteBipartite { .. } => FamilyKind::CompleteBipartite,
            FamilySpec::Path { .. } => FamilyKind::Path,
            FamilySpec::Cycle { .. } => FamilyKind::Cycle,
            FamilySpec::Star { .. } => FamilyKind::Star,
            FamilySpec::Starlike { .. } => FamilyKind::Starlike,
            FamilySpec::Kite { .. } => FamilyKind::Kite,
            FamilySpec::Lollipop { .. } => FamilyKind::Lollipop,
            FamilySpec::GeneralizedStarlike { .. } => FamilyKind::GeneralizedStarlike,
        }
    }

    /// Checks the family's parameter constraints.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidSpec(msg));
        match self {
            FamilySpec::Complete { n } | FamilySpec::Path { n } if *n < 1 => {
                fail(format!("{} requires n >= 1, got {n}", self.kind()))
            }
            FamilySpec::Cycle { n } | FamilySpec::Star { n } if *n < 3 => {
                fail(format!("{} requires n >= 3, got {n}", self.kind()))
            }
            FamilySpec::CompleteBipartite { n1, n2 } if *n1 < 1 || n1 > n2 => fail(format!(
                "complete-bipartite requires 1 <= n1 <= n2, got n1={n1} n2={n2}"
            )),
            FamilySpec::Starlike { branches } if branches.branch_count() < 3 => fail(format!(
                "starlike requires center degree m >= 3, got m={}",
                branches.branch_count()
            )),
            FamilySpec::Kite { n1, n2 } if *n1 < 2 || *n2 < 2 => fail(format!(
                "kite requires n1 >= 2 and n2 >= 2, got n1={n1} n2={n2}"
            )),
            FamilySpec::Lollipop { n1, n2 } if *n1 < 3 || *n2 < 2 => fail(format!(
                "lollipop requires n1 >= 3 and n2 >= 2, got n1={n1} n2={n2}"
            )),
            FamilySpec::GeneralizedStarlike { n1, branches } => {
                let r = n1 + branches.branch_count() - 1;
                if *n1 < 3 {
                    fail(format!("genstar requires n1 >= 3, got {n1}"))
                } else if r <= 2 {
                    fail(format!("genstar requires d(x0) = n1 - 1 + m > 2, got {r}"))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    /// Number of vertices of the built graph.
    pub fn vertex_count(&self) -> usize {
        match self {
            FamilySpec::Complete { n }
            | FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Star { n } => *n,
            FamilySpec::CompleteBipartite { n1, n2 } => n1 + n2,
            FamilySpec::Starlike { branches } => branches.vertex_count(),
            FamilySpec::Kite { n1, n2 } | FamilySpec::Lollipop { n1, n2 } => n1 + n2 - 1,
            FamilySpec::GeneralizedStarlike { n1, branches } => n1 + branches.vertex_count() - 1,
        }
    }

    /// Degree `d(x_0) = n1 - 1 + m` of the coalescence vertex, for generalized
    /// starlike trees.
    pub fn coalescence_degree(&self) -> Option<usize> {
        match self {
            FamilySpec::GeneralizedStarlike { n1, branches } => {
                Some(n1 - 1 + branches.branch_count())
            }
            _ => None,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = self.kind();
        match self {
            FamilySpec::Complete { n }
            | FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Star { n } => write!(f, "{kind} n={n}"),
            FamilySpec::CompleteBipartite { n1, n2 }
            | FamilySpec::Kite { n1, n2 }
            | FamilySpec::Lollipop { n1, n2 } => write!(f, "{kind} n1={n1} n2={n2}"),
            FamilySpec::Starlike { branches } => write!(f, "{kind} L={branches}"),
            FamilySpec::GeneralizedStarlike { n1, branches } => {
                write!(f, "{kind} n1={n1} L={branches}")
            }
        }
    }
}

impl fmt::Debug for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Builds the graph described by `spec` with the labeling documented at the
/// top of this module.
pub fn build(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.vertex_count();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    match spec {
        FamilySpec::Complete { n } => clique(0, *n, &mut edges),
        FamilySpec::CompleteBipartite { n1, n2 } => {
            for u in 0..*n1 {
                edges.extend((*n1..n1 + n2).map(|v| (u, v)));
            }
        }
        FamilySpec::Path { n } => edges.extend((1..*n).map(|v| (v - 1, v))),
        FamilySpec::Cycle { n } => edges.extend((0..*n).map(|v| (v, (v + 1) % n))),
        FamilySpec::Star { n } => edges.extend((1..*n).map(|v| (0, v))),
        FamilySpec::Starlike { branches } => attach_branches(0, 1, branches, &mut edges),
        FamilySpec::Kite { n1, n2 } => {
            clique(0, *n1, &mut edges);
            pendant_path(*n1, *n2, &mut edges);
        }
        FamilySpec::Lollipop { n1, n2 } => {
            edges.extend((0..*n1).map(|v| (v, (v + 1) % n1)));
            pendant_path(*n1, *n2, &mut edges);
        }
        FamilySpec::GeneralizedStarlike { n1, branches } => {
            clique(0, *n1, &mut edges);
            attach_branches(0, *n1, branches, &mut edges);
        }
    }
    Graph::from_edges(n, edges)
}

fn clique(start: usize, size: usize, edges: &mut Vec<(usize, usize)>) {
    for u in start..start + size {
        edges.extend((u + 1..start + size).map(|v| (u, v)));
    }
}

/// Path of `path_vertices` vertices hanging off vertex 0, using fresh vertices
/// from `first` on.
fn pendant_path(first: usize, path_vertices: usize, edges: &mut Vec<(usize, usize)>) {
    let mut prev = 0;
    for v in first..first + path_vertices - 1 {
        edges.push((prev, v));
        prev = v;
    }
}

fn attach_branches(
    center: usize,
    first: usize,
    branches: &BranchSequence,
    edges: &mut Vec<(usize, usize)>,
) {
    let mut next = first;
    for len in branches.lengths() {
        let mut prev = center;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
}

/// Length of a longest path in the family member.
pub fn rho(spec: &FamilySpec) -> Result<usize> {
    spec.validate()?;
    Ok(match spec {
        FamilySpec::Complete { n } | FamilySpec::Path { n } | FamilySpec::Cycle { n } => n - 1,
        FamilySpec::CompleteBipartite { n1, n2 } if n1 == n2 => 2 * n1 - 1,
        FamilySpec::CompleteBipartite { n1, .. } => 2 * n1,
        FamilySpec::Star { .. } => 2,
        FamilySpec::Starlike { branches } => branches.longest() + branches.second_longest(),
        FamilySpec::Kite { n1, n2 } | FamilySpec::Lollipop { n1, n2 } => n1 + n2 - 2,
        FamilySpec::GeneralizedStarlike { n1, branches } => {
            let (t1, t2) = (branches.longest(), branches.second_longest());
            (t1 + n1 - 1).max(t1 + t2)
        }
    })
}

/// Bounds for [`family_grid`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridBounds {
    /// Upper bound on every scalar parameter (`n`, `n1`, `n2`) and, for the
    /// starlike part of branch families, on its vertex count.
    pub max_param: Option<usize>,
    /// Upper bound on the vertex count of the built graph.
    pub max_vertices: Option<usize>,
}

/// Every valid member of `kind` within `bounds`, in a deterministic order.
/// At least one bound must be set.
pub fn family_grid(kind: FamilyKind, bounds: GridBounds) -> Result<Vec<FamilySpec>> {
    let cap = match (bounds.max_param, bounds.max_vertices) {
        (None, None) => {
            return Err(Error::InvalidSpec("grid needs --max or --max-n".into()));
        }
        (Some(p), None) => p.max(1) * 2,
        (_, Some(v)) => v,
    };
    let param_ok = |p: usize| bounds.max_param.is_none_or(|m| p <= m);
    let vertices_ok =
        |spec: &FamilySpec| bounds.max_vertices.is_none_or(|m| spec.vertex_count() <= m);
    let mut out = Vec::new();
    let mut push = |spec: FamilySpec| {
        if spec.validate().is_ok() && vertices_ok(&spec) {
            out.push(spec);
        }
    };
    let scalars = || (1..=cap).filter(|&p| param_ok(p));
    match kind {
        FamilyKind::Complete => scalars().for_each(|n| push(FamilySpec::Complete { n })),
        FamilyKind::Path => scalars().for_each(|n| push(FamilySpec::Path { n })),
        FamilyKind::Cycle => scalars().for_each(|n| push(FamilySpec::Cycle { n })),
        FamilyKind::Star => scalars().for_each(|n| push(FamilySpec::Star { n })),
        FamilyKind::CompleteBipartite => {
            for n1 in scalars() {
                for n2 in scalars().filter(|&n2| n2 >= n1) {
                    push(FamilySpec::CompleteBipartite { n1, n2 });
                }
            }
        }
        FamilyKind::Kite | FamilyKind::Lollipop => {
            for n1 in scalars() {
                for n2 in scalars() {
                    push(if kind == FamilyKind::Kite {
                        FamilySpec::Kite { n1, n2 }
                    } else {
                        FamilySpec::Lollipop { n1, n2 }
                    });
                }
            }
        }
        FamilyKind::Starlike => {
            for size in scalars() {
                for branches in branch_sequences(size) {
                    push(FamilySpec::Starlike { branches });
                }
            }
        }
        FamilyKind::GeneralizedStarlike => {
            for n1 in scalars() {
                for size in scalars() {
                    for branches in branch_sequences(size) {
                        push(FamilySpec::GeneralizedStarlike {
                            n1,
                            branches: branches.clone(),
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}
