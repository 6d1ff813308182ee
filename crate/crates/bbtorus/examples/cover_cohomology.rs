//! Cohomology of the cover: the fixed subring and the cokernel of the
//! comparison map from the torus subcomplex.
//!
//! Run with: cargo run --example cover_cohomology

use bbtorus::complex::{generate, Generator, SimplicialComplex};
use bbtorus::cover::cover_cohomology_report;
use bbtorus::ring::RingSpec;

fn describe(name: &str, complex: &SimplicialComplex, ring: &RingSpec) {
    let report = cover_cohomology_report(complex, ring);
    println!(
        "{name} over {ring}: the fixed subring is the whole ring: {}",
        report.ring_isomorphism
    );
    for d in &report.degrees {
        let cokernel = if d.cokernel_vanishes {
            "0".to_string()
        } else {
            format!(
                "a Z-indexed product of groups of rank {}",
                d.cokernel_factor.free_rank
            )
        };
        println!(
            "  H^{}: fixed subring rank {} (torsion {:?}), cokernel {}",
            d.degree,
            d.fixed_subring.free_rank,
            d.fixed_subring
                .torsion
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>(),
            cokernel,
        );
    }
    println!();
}

fn main() {
    // acyclic case: the cohomology ring of the cover is the face ring
    // modulo beta, here the cohomology of a 2-torus
    let triangle = generate(&Generator::parse("simplex(2)").unwrap()).unwrap();
    describe("solid triangle", &triangle, &RingSpec::Rationals);

    // non-acyclic case: an uncountable product appears in degree 2
    let circle = generate(&Generator::parse("simplex_boundary(2)").unwrap()).unwrap();
    describe("hollow triangle", &circle, &RingSpec::Rationals);

    // the projective plane is acyclic mod 3 but not mod 2
    let rp2 = generate(&Generator::parse("rp2_six").unwrap()).unwrap();
    describe("projective plane", &rp2, &RingSpec::PrimeField(3));
    describe("projective plane", &rp2, &RingSpec::PrimeField(2));
}
