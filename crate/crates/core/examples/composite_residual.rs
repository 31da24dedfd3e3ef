//! For composite orders the coprime steps give Hamilton circuits and the
//! remaining steps fall apart into shorter cycles.
//!
//! cargo run --example composite_residual -- 15

use hamdecomp::oracle::verify_decomposition;
use hamdecomp::step::pack_leading;
use hamdecomp::Tournament;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(9);
    let packing = pack_leading(m)?;

    println!("{} Hamilton circuits:", packing.circuits.len());
    for c in &packing.circuits {
        println!("  {:?}", c.labels());
    }
    if packing.residual.is_empty() {
        println!("no residual: {m} is prime");
    }
    for sys in &packing.residual {
        let cycles: Vec<Vec<usize>> = sys
            .cycles
            .iter()
            .map(|c| c.iter().map(|v| v.label()).collect())
            .collect();
        println!(
            "step {} (gcd {}): {} cycles of length {}: {:?}",
            sys.step.alpha(),
            sys.step.gcd(),
            cycles.len(),
            cycles[0].len(),
            cycles
        );
    }

    let t = Tournament::leading(m)?;
    println!(
        "circuits and residual cover all {} edges exactly once: {}",
        t.edges().count(),
        verify_decomposition(&t, &packing).is_ok()
    );
    Ok(())
}
