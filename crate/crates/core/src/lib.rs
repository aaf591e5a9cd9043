//! Path sequences of graphs: exact counting, closed forms for several graph
//! families, recovery of family members from their sequences, and searches
//! for non-isomorphic graphs that share a sequence.
//!
//! `P_h(G)` is the number of simple paths with `h` edges in `G`, counting a
//! path and its reversal once. `P_0` is the vertex count and `P_1` the edge
//! count. The sequence runs up to the longest path length.
//!
//! ```
//! use pathseq::{build, path_sequence_dfs, sequence_of, FamilySpec};
//!
//! let spec = FamilySpec::Lollipop { n1: 4, n2: 3 };
//! let graph = build(&spec).unwrap();
//! assert_eq!(path_sequence_dfs(&graph).unwrap(), sequence_of(&spec).unwrap());
//! ```

pub mod cli;
pub mod closed_forms;
pub mod collision;
pub mod error;
pub mod generators;
pub mod graph;
pub mod identify;
pub mod oracle;

pub use closed_forms::{
    complete_bipartite_count, complete_count, generalized_starlike_count, kite_count,
    lollipop_count, sequence_of, simple_family_sequence, starlike_count, starlike_type_counts,
};
pub use collision::{
    enumerate_labeled_graphs, find_collisions, format_record, write_collision_report,
    CollisionOptions, CollisionRecord, CollisionScan, SkippedGraph,
};
pub use error::{Error, Result};
pub use generators::{
    branch_sequences, build, family_grid, rho, BranchSequence, FamilyKind, FamilySpec, GridBounds,
};
pub use graph::{
    are_isomorphic_small, is_connected, parse_edge_list, parse_graph6, write_edge_list,
    write_graph6, Graph,
};
pub use identify::{identify, same_by_sequence, IdentifyResult, Method, RecoveryStep};
pub use oracle::{
    classify_starlike_paths, longest_path_length, path_sequence_dfs, path_sequence_dp,
    PathSequence, PathTypeCounts,
};
