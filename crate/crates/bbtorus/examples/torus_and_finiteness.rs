//! Homology of the torus subcomplex itself, and when the cover's homology
//! is finitely generated.
//!
//! Run with: cargo run --example torus_and_finiteness

use bbtorus::complex::{generate, Generator};
use bbtorus::cover::is_fg_homology;
use bbtorus::face_ring::torus_homology;
use bbtorus::ring::RingSpec;

fn main() {
    // the torus subcomplex has one cell per simplex, shifted up one
    // degree, and no differentials: its homology is free on the spot
    for spec in ["simplex_boundary(2)", "simplex(3)", "rp2_six"] {
        let complex = generate(&Generator::parse(spec).unwrap()).unwrap();
        let ranks = torus_homology(&complex, &RingSpec::Integers);
        println!("{spec}: torus homology ranks {:?}", ranks.free_ranks());
    }

    // the cover's homology is finitely generated over the coefficients
    // exactly when the complex is acyclic over them
    println!();
    for (spec, token) in [
        ("simplex(2)", "z"),
        ("rp2_six", "f2"),
        ("rp2_six", "f3"),
        ("rp2_six", "z-inv:2"),
        ("points(2)", "q"),
    ] {
        let complex = generate(&Generator::parse(spec).unwrap()).unwrap();
        let ring = RingSpec::parse(token).unwrap();
        println!(
            "cover homology of {spec} finitely generated over {ring}: {}",
            is_fg_homology(&complex, &ring)
        );
    }
}
