//! Reduced homology and cohomology over several coefficient rings.
//!
//! Run with: cargo run --example homology

use bbtorus::complex::{generate, Generator};
use bbtorus::homology::{cohomology_summary, is_acyclic, reduced_homology};
use bbtorus::ring::RingSpec;

fn main() {
    let rp2 = generate(&Generator::parse("rp2_six").unwrap()).unwrap();
    println!("the 6-vertex projective plane, f = {}\n", rp2.f_vector());

    for token in ["z", "q", "f2", "f3", "z-inv:2"] {
        let ring = RingSpec::parse(token).unwrap();
        let homology = reduced_homology(&rp2, &ring);
        let cohomology = cohomology_summary(&rp2, &ring);
        println!("over {ring}: acyclic = {}", is_acyclic(&rp2, &ring));
        for d in &homology.degrees {
            println!(
                "  H~_{}({}) = {:<8}   H~^{}({}) = {}",
                d.degree,
                ring,
                d.group_string(&ring),
                d.degree,
                ring,
                cohomology.degree(d.degree).group_string(&ring),
            );
        }
        println!();
    }

    // the homology of the 2-torsion surface moves between degrees under
    // duality, and disappears whenever 2 is invertible
}
