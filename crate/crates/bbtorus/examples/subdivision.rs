//! Relative barycentric subdivision: flag complexes containing a chosen
//! subcomplex untouched and full.
//!
//! Run with: cargo run --example subdivision

use bbtorus::complex::{
    barycentric_subdivision, generate, relative_barycentric_subdivision, Generator,
    SimplicialComplex,
};

fn main() {
    // subdividing the solid triangle relative to its boundary stars only
    // the interior: a cone over the hollow triangle
    let solid = generate(&Generator::parse("simplex(2)").unwrap()).unwrap();
    let hollow = SimplicialComplex::parse("0 1\n1 2\n0 2").unwrap();
    let cone = relative_barycentric_subdivision(&solid, &hollow).unwrap();
    println!("triangle relative to its boundary: f = {}", cone.f_vector());
    // flagness of the result is only promised when the inner complex is
    // flag, and a hollow triangle is the standard non-flag example
    println!("  flag: {} (the inner complex is not flag)", cone.is_flag());
    println!(
        "  boundary sits inside as a full subcomplex: {}",
        cone.is_full_subcomplex(&hollow).unwrap()
    );
    println!(
        "  it was not full in the undivided triangle: {}",
        solid.is_full_subcomplex(&hollow).unwrap()
    );

    // with the empty complex inside, this is the ordinary barycentric
    // subdivision, always flag
    let edge = generate(&Generator::parse("simplex(1)").unwrap()).unwrap();
    let split_edge = barycentric_subdivision(&edge);
    println!("\nsubdivided edge: f = {}", split_edge.f_vector());
    print!("{}", split_edge.to_canonical_string());

    let rp2 = generate(&Generator::parse("rp2_six").unwrap()).unwrap();
    let subdivided = barycentric_subdivision(&rp2);
    println!(
        "\nprojective plane: flag = {}; subdivided: f = {}, flag = {}",
        rp2.is_flag(),
        subdivided.f_vector(),
        subdivided.is_flag()
    );

    // relative to the whole complex, nothing happens
    let unchanged = relative_barycentric_subdivision(&rp2, &rp2).unwrap();
    println!("relative to itself: unchanged = {}", unchanged == rp2);
}
