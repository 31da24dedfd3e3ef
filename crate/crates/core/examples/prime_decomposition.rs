//! Step-sequence Hamilton decomposition of a prime-order leading tournament.
//!
//! cargo run --example prime_decomposition -- 11

use hamdecomp::oracle::verify_decomposition;
use hamdecomp::step::{decompose_prime, step_sequence};
use hamdecomp::Tournament;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(7);

    for alpha in 1..=(m - 1) / 2 {
        match step_sequence(m, alpha) {
            Ok(seq) => println!("sequence {alpha}: {seq:?}"),
            Err(e) => println!("sequence {alpha}: {e}"),
        }
    }

    let packing = match decompose_prime(m) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    for (k, c) in packing.circuits.iter().enumerate() {
        let path: Vec<String> = c.vertices().iter().map(|v| v.to_string()).collect();
        println!("circuit {}: {} -> v1", k + 1, path.join(" -> "));
    }

    let check = verify_decomposition(&Tournament::leading(m)?, &packing);
    println!("verified: {}", check.is_ok());
    Ok(())
}
