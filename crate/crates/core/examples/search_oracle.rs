//! Exhaustive search settles whether a tournament has a Hamilton
//! decomposition when no construction is at hand.
//!
//! cargo run --release --example search_oracle -- 9 4

use std::time::Instant;

use hamdecomp::oracle::{find_decomposition_parallel, verify_decomposition, SearchBudget};
use hamdecomp::Tournament;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let m: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(9);
    let jobs: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(1);

    let t = Tournament::leading(m)?;
    let budget = SearchBudget::nodes(100_000_000);
    let start = Instant::now();
    let outcome = find_decomposition_parallel(&t, budget, jobs)?;
    println!(
        "leading({m}): {} after {} nodes in {:?}",
        outcome.status,
        outcome.nodes_explored,
        start.elapsed()
    );

    if let Some(p) = &outcome.decomposition {
        for c in &p.circuits {
            let types: Vec<usize> = c
                .edges()
                .map(|e| t.edge_type(e).map(|ty| ty.distance()))
                .collect::<Result<_, _>>()?;
            println!("  {:?}  edge types {:?}", c.labels(), types);
        }
        println!("verified: {}", verify_decomposition(&t, p).is_ok());
    }
    Ok(())
}
