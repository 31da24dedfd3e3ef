//! Matrix, JSON and colored DOT output, and reading them back.
//!
//! cargo run --example export_formats > pack9.dot

use hamdecomp::io::{export_dot, export_json, export_matrix, parse_json, parse_matrix, Coloring};
use hamdecomp::step::pack_leading;
use hamdecomp::Tournament;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = Tournament::leading(9)?;
    let packing = pack_leading(9)?;

    let matrix = export_matrix(&t);
    assert_eq!(parse_matrix(&matrix)?, t);
    eprintln!("matrix:\n{matrix}");

    let json = export_json(&packing);
    assert_eq!(parse_json(&json)?, packing);
    eprintln!("json: {json}");

    // circuits in brown, green, orange; the residual triangles in blue
    print!("{}", export_dot(&t, Some(&packing), Coloring::ByCircuit)?);
    Ok(())
}
