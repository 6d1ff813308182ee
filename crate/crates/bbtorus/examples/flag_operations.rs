//! Flag tests, flag completion, and full subcomplexes.
//!
//! Run with: cargo run --example flag_operations

use bbtorus::complex::{generate, Generator, SimplicialComplex};

fn gen(spec: &str) -> SimplicialComplex {
    generate(&Generator::parse(spec).unwrap()).unwrap()
}

fn main() {
    // the boundary of a triangle is the smallest non-flag complex: its
    // 1-skeleton is a 3-clique but the triangle itself is missing
    let circle = gen("simplex_boundary(2)");
    println!("boundary of the triangle: flag = {}", circle.is_flag());
    let completed = circle.flag_completion();
    println!(
        "after completion:         f = {} (the solid triangle)",
        completed.f_vector()
    );

    // a 4-cycle has no 3-cliques at all, so it is already flag
    let square = gen("cycle(4)");
    println!("4-cycle:                  flag = {}", square.is_flag());

    // the 6-vertex projective plane has the complete graph as 1-skeleton,
    // so its completion is the full 5-simplex
    let rp2 = gen("rp2_six");
    println!(
        "projective plane: flag = {}, completion f = {}",
        rp2.is_flag(),
        rp2.flag_completion().f_vector()
    );

    // full subcomplexes: the span of a vertex subset
    let full = square.full_subcomplex(&["0", "2"]).unwrap();
    println!(
        "span of two opposite square vertices: f = {} (no edge between them)",
        full.f_vector()
    );
    println!(
        "is the hollow triangle full in the solid one? {}",
        completed.is_full_subcomplex(&circle).unwrap()
    );
}
