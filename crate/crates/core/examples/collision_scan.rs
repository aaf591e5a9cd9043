//! Find non-isomorphic graphs that share a path sequence among all labeled
//! graphs on n vertices.
//!
//!     cargo run --release --example collision_scan -- 6 --connected-only

use pathseq::{
    enumerate_labeled_graphs, find_collisions, write_collision_report, CollisionOptions,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n = args.first().map(|a| a.parse()).transpose()?.unwrap_or(5);
    let options = CollisionOptions {
        connected_only: args.iter().any(|a| a == "--connected-only"),
        ..CollisionOptions::default()
    };
    let scan = find_collisions(enumerate_labeled_graphs(n)?, options);
    write_collision_report(&scan.records, &mut std::io::stdout().lock())?;
    eprintln!(
        "{} labeled graphs, {} collision groups",
        scan.scanned,
        scan.records.len()
    );
    Ok(())
}
