//! Build family members and print them as graph6 and as edge lists.
//!
//!     cargo run --example graph_formats

use pathseq::{
    build, parse_edge_list, parse_graph6, write_edge_list, write_graph6, BranchSequence, FamilySpec,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let specs = [
        FamilySpec::Star { n: 4 },
        FamilySpec::CompleteBipartite { n1: 2, n2: 3 },
        FamilySpec::Kite { n1: 4, n2: 3 },
        FamilySpec::Lollipop { n1: 4, n2: 3 },
        FamilySpec::Starlike {
            branches: BranchSequence::new(vec![2, 1])?,
        },
        FamilySpec::GeneralizedStarlike {
            n1: 4,
            branches: "1,0,1".parse()?,
        },
    ];
    for spec in &specs {
        let g = build(spec)?;
        let g6 = write_graph6(&g)?;
        let edges = write_edge_list(&g);
        assert_eq!(parse_graph6(&g6)?, g);
        assert_eq!(parse_edge_list(&edges)?, g);
        println!(
            "{spec}: graph6 {g6}, edges {:?}",
            g.edges().collect::<Vec<_>>()
        );
    }
    Ok(())
}
