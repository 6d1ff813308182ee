//! Cohomological dimension of Bestvina-Brady groups, including a group
//! whose dimension depends on the coefficient ring.
//!
//! Run with: cargo run --example cohomological_dimension

use bbtorus::cd::{cd_bb_group, cd_cover_bounds, tcd, tcd_cover};
use bbtorus::complex::{generate, Generator};
use bbtorus::ring::RingSpec;

fn main() {
    // a flag triangulation of a mod-2 Moore space: the projective plane,
    // subdivided once to become flag
    let rp2 = generate(&Generator::parse("rp2_six").unwrap()).unwrap();
    let moore = generate(&Generator::parse("barycentric(rp2_six)").unwrap()).unwrap();
    println!(
        "subdivided projective plane: {} vertices, flag = {}",
        moore.vertex_count(),
        moore.is_flag()
    );

    println!("\nring      tcd(level)  cd(group)");
    for token in ["z", "f2", "q", "f3", "z-inv:2"] {
        let ring = RingSpec::parse(token).unwrap();
        let report = cd_bb_group(&moore, &ring).unwrap();
        println!(
            "{:<9} {:>10}  {:>9}",
            ring.to_string(),
            report.tcd_complex,
            report.cd_exact
        );
    }
    println!("\nthe group dimension drops from 3 to 2 exactly when 2 becomes invertible");

    // the same numbers for the unsubdivided surface come from the cover
    // bounds, since it is not flag
    let bounds = cd_cover_bounds(&rp2, &RingSpec::PrimeField(2)).unwrap();
    println!(
        "\nunsubdivided surface over F_2: cover dimension in [{}, {}], exact = {:?}",
        bounds.lower, bounds.upper, bounds.exact
    );

    // small flag complexes
    for (spec, token) in [("simplex(1)", "z"), ("cycle(4)", "q"), ("simplex(3)", "z")] {
        let c = generate(&Generator::parse(spec).unwrap()).unwrap();
        let ring = RingSpec::parse(token).unwrap();
        println!(
            "{spec} over {ring}: tcd(complex) = {}, tcd(cover) = {}, cd(group) = {}",
            tcd(&c, &ring).unwrap(),
            tcd_cover(&c, &ring).unwrap(),
            cd_bb_group(&c, &ring).unwrap().cd_exact
        );
    }

    // the hypotheses are enforced
    let circle = generate(&Generator::parse("simplex_boundary(2)").unwrap()).unwrap();
    println!(
        "\nhollow triangle: {}",
        cd_bb_group(&circle, &RingSpec::Integers).unwrap_err()
    );
    let point = generate(&Generator::parse("simplex(0)").unwrap()).unwrap();
    println!(
        "single point:    {}",
        cd_bb_group(&point, &RingSpec::Integers).unwrap_err()
    );
}
