//! Closed-form sequences next to the DP oracle, plus two places where the
//! usual simplified forms go wrong.
//!
//!     cargo run --example closed_forms

use pathseq::closed_forms::piecewise;
use pathseq::{
    build, complete_bipartite_count, kite_count, path_sequence_dp, sequence_of, starlike_count,
    BranchSequence, FamilySpec,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let specs = [
        FamilySpec::Complete { n: 6 },
        FamilySpec::CompleteBipartite { n1: 3, n2: 4 },
        FamilySpec::Kite { n1: 5, n2: 4 },
        FamilySpec::Lollipop { n1: 6, n2: 3 },
        FamilySpec::Starlike {
            branches: BranchSequence::from_lengths(&[1, 2, 2, 4])?,
        },
        FamilySpec::GeneralizedStarlike {
            n1: 4,
            branches: BranchSequence::from_lengths(&[1, 3])?,
        },
    ];
    for spec in &specs {
        let formula = sequence_of(spec)?;
        let oracle = path_sequence_dp(&build(spec)?)?;
        println!(
            "{spec:<32} {formula}  {}",
            if formula == oracle { "ok" } else { "MISMATCH" }
        );
    }

    println!();
    println!(
        "K_2,3, h=4: count {}, cancelled form {:?}",
        complete_bipartite_count(2, 3, 4),
        piecewise::complete_bipartite_cancelled(2, 3, 4)
    );
    let claw4 = BranchSequence::new(vec![4])?;
    println!(
        "K_1,4, h=3: count {}, cubic polynomial {}",
        starlike_count(&claw4, 3),
        piecewise::starlike_p3_polynomial(&claw4)
    );
    println!(
        "kite (3,4), h=5: count {}, piecewise {:?}",
        kite_count(3, 4, 5),
        piecewise::kite(3, 4, 5)
    );
    Ok(())
}
