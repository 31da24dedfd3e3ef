//! Build the leading tournament, check its didegrees and group its edges by
//! distance type.
//!
//! cargo run --example leading_tournament -- 9

use hamdecomp::io::export_matrix;
use hamdecomp::tournament::{EdgeType, Tournament};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(9);
    let t = Tournament::leading(m)?;

    println!("leading tournament on {m} vertices:");
    print!("{}", export_matrix(&t));

    for v in t.vertices() {
        let d = t.didegree(v)?;
        println!("{v}: in {} out {}", d.in_degree, d.out_degree);
    }
    println!("diregular: {}", t.is_diregular());

    for ty in 1..=t.half() {
        let edges = t.edges_of_type(EdgeType::new(ty))?;
        let listed: Vec<String> = edges
            .iter()
            .map(|e| format!("{}->{}", e.from.label(), e.to.label()))
            .collect();
        println!("type {ty} ({} edges): {}", edges.len(), listed.join(" "));
    }
    Ok(())
}
