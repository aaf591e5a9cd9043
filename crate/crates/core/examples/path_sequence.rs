//! Count the simple paths of a graph with both exact oracles.
//!
//!     cargo run --example path_sequence -- 'Cs'
//!     cargo run --example path_sequence -- 'EQjO'

use pathseq::{longest_path_length, parse_graph6, path_sequence_dfs, path_sequence_dp};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let records: Vec<String> = std::env::args().skip(1).collect();
    let records = if records.is_empty() {
        vec!["Cs".to_string(), "Cw".to_string(), "EQjO".to_string()]
    } else {
        records
    };
    for record in &records {
        let g = parse_graph6(record)?;
        let dp = path_sequence_dp(&g)?;
        print!(
            "{record:>10}  n={:<2} rho={:<2} P = {dp}",
            g.vertex_count(),
            longest_path_length(&g)?
        );
        // The enumerator is only for small graphs; compare when it applies.
        match path_sequence_dfs(&g) {
            Ok(dfs) => println!("  (dfs agrees: {})", dfs == dp),
            Err(_) => println!(),
        }
    }
    Ok(())
}
