//! The exterior face ring: shuffle products, the element beta, and the
//! quotient by the ideal it generates.
//!
//! Run with: cargo run --example face_ring

use std::sync::Arc;

use bbtorus::arith::{IntRing, RatField};
use bbtorus::complex::{generate, Generator};
use bbtorus::face_ring::{quotient_by_beta_summary, FaceRing, FaceRingQuotient};
use bbtorus::homology::augmented_chain_complex;
use bbtorus::ring::RingSpec;

fn main() {
    let triangle = Arc::new(generate(&Generator::parse("simplex(2)").unwrap()).unwrap());
    let ring = FaceRing::new(Arc::clone(&triangle), IntRing);

    // the dual basis elements multiply by interleaving vertex tuples
    let da = ring.dual_basis_by_labels(&["0"]).unwrap();
    let db = ring.dual_basis_by_labels(&["1"]).unwrap();
    let product = ring.shuffle_product(&da, &db).unwrap();
    println!("d(0) * d(1) = {}", ring.display_element(&product));
    let reversed = ring.shuffle_product(&db, &da).unwrap();
    println!(
        "d(1) * d(0) = {}  (anticommutativity)",
        ring.display_element(&reversed)
    );

    // beta sums the vertex duals; multiplying by it is the coboundary
    let beta = ring.beta();
    println!("beta = {}", ring.display_element(&beta));
    println!(
        "beta * beta = {}",
        ring.display_element(&ring.shuffle_product(&beta, &beta).unwrap())
    );

    let data = augmented_chain_complex(&triangle, &RingSpec::Integers);
    for n in 0..=ring.top_degree() {
        let shuffles = ring.beta_mult_matrix(n);
        let coboundary = data.coboundary_matrix(n as isize - 1).lift(&IntRing);
        println!(
            "degree {n}: beta-multiplication matrix equals the coboundary: {}",
            shuffles == coboundary
        );
    }

    // the quotient by (beta) is the cohomology ring of the cyclic cover
    // when the complex is acyclic; for the solid triangle the cover is a
    // 2-torus
    println!(
        "\nquotient by (beta) over Q, ranks by degree: {:?}",
        quotient_by_beta_summary(&triangle, &RingSpec::Rationals).free_ranks()
    );
    let quotient = FaceRingQuotient::new(triangle, RingSpec::Rationals, RatField).unwrap();
    let generators = quotient.free_generators(1);
    let g0 = &generators[0];
    let g1 = &generators[1];
    let cup = quotient.multiply(g0, g1).unwrap();
    println!(
        "cup product of the two degree-1 generators is nonzero: {}",
        !quotient.is_zero_class(&cup).unwrap()
    );
    let squared = quotient.multiply(g0, g0).unwrap();
    println!(
        "square of a degree-1 generator vanishes: {}",
        quotient.is_zero_class(&squared).unwrap()
    );
}
