#![allow(dead_code)]

use pathseq::{branch_sequences, FamilyKind, FamilySpec, Graph};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// The parameter grids checked against the oracles.
pub fn grid(kind: FamilyKind) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    match kind {
        FamilyKind::Complete => out.extend((1..=10).map(|n| FamilySpec::Complete { n })),
        FamilyKind::CompleteBipartite => {
            for n1 in 1..=6 {
                out.extend((n1..=6).map(|n2| FamilySpec::CompleteBipartite { n1, n2 }));
            }
        }
        FamilyKind::Path => out.extend((1..=12).map(|n| FamilySpec::Path { n })),
        FamilyKind::Cycle => out.extend((3..=12).map(|n| FamilySpec::Cycle { n })),
        FamilyKind::Star => out.extend((3..=12).map(|n| FamilySpec::Star { n })),
        FamilyKind::Kite => {
            for n1 in 2..=7 {
                out.extend((2..=7).map(|n2| FamilySpec::Kite { n1, n2 }));
            }
        }
        FamilyKind::Lollipop => {
            for n1 in 3..=8 {
                out.extend((2..=8).map(|n2| FamilySpec::Lollipop { n1, n2 }));
            }
        }
        FamilyKind::Starlike => {
            for size in 2..=12 {
                out.extend(
                    branch_sequences(size)
                        .into_iter()
                        .filter(|b| b.branch_count() >= 3)
                        .map(|branches| FamilySpec::Starlike { branches }),
                );
            }
        }
        FamilyKind::GeneralizedStarlike => {
            for n1 in 3..=5 {
                for size in 2..=8 {
                    out.extend(
                        branch_sequences(size)
                            .into_iter()
                            .map(|branches| FamilySpec::GeneralizedStarlike { n1, branches }),
                    );
                }
            }
        }
    }
    out
}

pub fn all_grids() -> Vec<FamilySpec> {
    FamilyKind::ALL.iter().flat_map(|&k| grid(k)).collect()
}

/// G(n, p) sample.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}
