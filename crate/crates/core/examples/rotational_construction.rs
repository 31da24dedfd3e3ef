//! Rotational construction: a Hamilton-decomposable diregular tournament
//! for any odd order, prime or not.
//!
//! cargo run --example rotational_construction -- 15

use hamdecomp::oracle::verify_decomposition;
use hamdecomp::rotation::{
    rotation_decomposition, rotation_permutation, rotation_tournament, RotationLayout,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(9);

    let layout = RotationLayout::new(m)?;
    let ring: Vec<usize> = layout
        .circle_positions()
        .iter()
        .map(|v| v.label())
        .collect();
    println!("clockwise circle order: {ring:?} (v1 at the center)");

    let sigma = rotation_permutation(m)?;
    let images: Vec<usize> = (1..=m)
        .map(|l| sigma.apply(hamdecomp::VertexId::new(l)).label())
        .collect();
    println!(
        "one-step rotation maps 1..={m} to {images:?}, period {}",
        sigma.period()
    );

    let packing = rotation_decomposition(m)?;
    for (k, c) in packing.circuits.iter().enumerate() {
        println!("rotation {k}: {:?}", c.labels());
    }

    let t = rotation_tournament(m)?;
    println!("diregular: {}", t.is_diregular());
    println!(
        "decomposition verified: {}",
        verify_decomposition(&t, &packing).is_ok()
    );
    println!(
        "same as the leading tournament: {}",
        t == hamdecomp::Tournament::leading(m)?
    );
    Ok(())
}
