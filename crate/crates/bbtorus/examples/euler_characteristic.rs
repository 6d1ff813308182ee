//! Euler characteristics of cyclic covers of torus subcomplexes.
//!
//! Run with: cargo run --example euler_characteristic

use bbtorus::complex::{generate, Generator};
use bbtorus::cover::euler_characteristic_cover;

fn main() {
    // for a rationally acyclic complex the cover has finite-dimensional
    // rational homology and every degree-i simplex count enters with
    // weight i + 1
    for n in 0..=4 {
        let simplex = generate(&Generator::Simplex(n)).unwrap();
        println!(
            "cover of the solid {n}-simplex (an {n}-torus): chi = {}",
            euler_characteristic_cover(&simplex).unwrap()
        );
    }

    let rp2 = generate(&Generator::parse("rp2_six").unwrap()).unwrap();
    println!(
        "cover of the projective plane: chi = {}",
        euler_characteristic_cover(&rp2).unwrap()
    );

    // the invariant belongs to the torus subcomplex, not to the homotopy
    // type of the complex: subdividing adds circle factors and changes it
    let subdivided = generate(&Generator::parse("barycentric(rp2_six)").unwrap()).unwrap();
    println!(
        "after barycentric subdivision (a different torus!): chi = {}",
        euler_characteristic_cover(&subdivided).unwrap()
    );

    // without rational acyclicity the invariant is undefined
    let points = generate(&Generator::parse("points(2)").unwrap()).unwrap();
    println!(
        "two points: {}",
        euler_characteristic_cover(&points).unwrap_err()
    );
}
