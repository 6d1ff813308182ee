//! Parsing the plain text format and reading off basic facts.
//!
//! Run with: cargo run --example parse_and_info

use bbtorus::complex::SimplicialComplex;

fn main() {
    let document = "\
# a hollow tetrahedron glued to a dangling edge
a b c
a b d
a c d
b c d
d e
";
    let complex = SimplicialComplex::parse(document).unwrap();
    println!("vertices: {:?}", complex.vertices());
    println!("dimension: {}", complex.dimension());
    println!("f-vector:  {}", complex.f_vector());
    println!("flag:      {}", complex.is_flag());
    println!("simplices: {}", complex.simplex_count());

    println!("\nfacets in canonical form:");
    print!("{}", complex.to_canonical_string());

    // the empty document is the empty complex, which still has its
    // (-1)-dimensional empty simplex
    let empty = SimplicialComplex::parse("").unwrap();
    println!(
        "\nempty complex: dimension {}, f = {}",
        empty.dimension(),
        empty.f_vector()
    );
}
