//! Break the paths of a starlike tree down by where the center sits, from
//! the closed forms and by enumeration.
//!
//!     cargo run --example starlike_census -- 2,1,0,1

use pathseq::{build, classify_starlike_paths, starlike_type_counts, BranchSequence, FamilySpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let branches: BranchSequence = match std::env::args().nth(1) {
        Some(arg) => arg.parse()?,
        None => BranchSequence::from_lengths(&[1, 1, 2, 4])?,
    };
    let g = build(&FamilySpec::Starlike {
        branches: branches.clone(),
    })?;
    println!(
        "starlike L={branches}: {} vertices, lengths {:?}",
        branches.vertex_count(),
        branches.lengths()
    );
    println!(" h   x1  x2  y1  y2  z1 / z2 / z3                     total  enumerated");
    for h in 1..=branches.longest() + branches.second_longest() {
        let c = starlike_type_counts(&branches, h)?;
        let seen = classify_starlike_paths(&g, 0, h)?;
        let list = |v: &[num_bigint::BigUint]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        println!(
            "{h:>2} {:>4}{:>4}{:>4}{:>4}  [{}] / [{}] / [{}]{:>10}  {}",
            c.x1,
            c.x2,
            c.y1,
            c.y2,
            list(&c.z1),
            list(&c.z2),
            list(&c.z3),
            c.total(),
            if seen == c { "same" } else { "DIFFERENT" }
        );
    }
    Ok(())
}
