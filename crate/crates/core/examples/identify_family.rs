//! Recover family parameters from a path sequence.
//!
//!     cargo run --example identify_family -- lollipop 6,6,7,8,4,2
//!     cargo run --example identify_family -- starlike 10,9,11,11,7,5,2

use pathseq::{identify, sequence_of, BranchSequence, FamilyKind, FamilySpec, PathSequence};

fn report(kind: FamilyKind, seq: &PathSequence) -> Result<(), Box<dyn std::error::Error>> {
    let r = identify(kind, seq)?;
    match &r.matched {
        Some(spec) => println!(
            "{kind} ({seq}): {spec} [{:?}, {} candidates]",
            r.method, r.candidates_examined
        ),
        None => println!("{kind} ({seq}): no match"),
    }
    for step in &r.recovery {
        println!(
            "    h={}: L_{} = {} / {} = {} rem {}",
            step.h,
            step.h - 2,
            step.numerator,
            step.divisor,
            step.quotient,
            step.remainder
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if let [kind, seq] = args.as_slice() {
        return report(kind.parse()?, &seq.parse()?);
    }
    let starlike = FamilySpec::Starlike {
        branches: BranchSequence::from_lengths(&[1, 1, 2, 3, 5])?,
    };
    let generalized = FamilySpec::GeneralizedStarlike {
        n1: 4,
        branches: BranchSequence::from_lengths(&[2, 3])?,
    };
    report(FamilyKind::Starlike, &sequence_of(&starlike)?)?;
    report(FamilyKind::GeneralizedStarlike, &sequence_of(&generalized)?)?;
    report(FamilyKind::Lollipop, &"6,6,7,8,4,2".parse()?)?;
    // K_1,3 is a star but not a complete graph.
    report(FamilyKind::Starlike, &"4,3,3".parse()?)?;
    report(FamilyKind::Complete, &"4,3,3".parse()?)?;
    Ok(())
}
