//! Homology of the infinite cyclic cover as a module over the deck group.
//!
//! Run with: cargo run --example cover_homology

use bbtorus::complex::{generate, Generator, SimplicialComplex};
use bbtorus::cover::{bb_homology, field_module_decomposition, laurent_snf_oracle};
use bbtorus::ring::RingSpec;

fn describe(name: &str, complex: &SimplicialComplex, ring: &RingSpec) {
    println!("{name} over {ring}:");
    for d in bb_homology(complex, ring) {
        println!(
            "  H_{}: fixed submodule rank {}, free part over the group ring {}, \
             trivial quotient rank {}, H~ below = {}, finitely generated: {}",
            d.degree,
            d.trivial_sub_rank,
            d.group_ring_rank,
            d.trivial_quot_rank,
            d.htilde.group_string(ring),
            d.finitely_generated,
        );
    }
    println!();
}

fn main() {
    let z = RingSpec::Integers;

    // two points: the cover of a wedge of two circles unwinds to a line
    // with a free orbit of loops, so degree one is free over the group ring
    let points = generate(&Generator::parse("points(2)").unwrap()).unwrap();
    describe("two points", &points, &z);

    // the full triangle: the cover is a 2-torus, everything is finitely
    // generated with trivial deck action
    let triangle = generate(&Generator::parse("simplex(2)").unwrap()).unwrap();
    describe("solid triangle", &triangle, &z);

    // the projective plane keeps its 2-torsion one degree up
    let rp2 = generate(&Generator::parse("rp2_six").unwrap()).unwrap();
    describe("projective plane", &rp2, &z);

    // over a field the module structure splits into `a` copies of the
    // Laurent polynomial ring and `b` trivial lines; an independent
    // polynomial-matrix computation confirms it
    for token in ["q", "f2"] {
        let field = RingSpec::parse(token).unwrap();
        let direct = field_module_decomposition(&rp2, &field).unwrap();
        let oracle = laurent_snf_oracle(&rp2, &field).unwrap();
        println!(
            "projective plane over {field}: (a, b) by degree = {:?}, oracle agrees: {}",
            direct.degrees,
            direct == oracle
        );
    }
}
