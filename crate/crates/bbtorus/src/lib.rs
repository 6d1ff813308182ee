//! Invariants of torus subcomplexes and their infinite cyclic covers.
//!
//! A finite simplicial complex `L` on a vertex set `V` determines a
//! subcomplex `T_L` of the torus with one circle factor per vertex: the
//! cells of `T_L` correspond to the simplices of `L`. Summing the circle
//! coordinates gives a map from `T_L` to the circle, and pulling back the
//! real line yields an infinite cyclic cover with deck group generated by
//! `z`. When `L` is a flag complex, the fundamental group of `T_L` is the
//! right-angled Artin group of the 1-skeleton and the cover's fundamental
//! group is the associated Bestvina-Brady group.
//!
//! This crate computes, in exact arithmetic over the integers, the
//! rationals, prime fields, and localizations of the integers:
//!
//! - reduced simplicial (co)homology with torsion ([`homology`]);
//! - the exterior face ring (the cohomology ring of `T_L`) with its shuffle
//!   product, the degree-one element summing the vertex duals, and the
//!   quotient by the ideal it generates ([`face_ring`]);
//! - the homology of the cyclic cover as a module over the deck group,
//!   with an independent polynomial-matrix oracle ([`cover`]);
//! - trivial cohomological dimensions and the cohomological dimension of
//!   the Bestvina-Brady group ([`cd`]);
//! - combinatorial operations: flag tests and completions, full
//!   subcomplexes, relative barycentric subdivision ([`complex`]).
//!
//! The `examples/` directory of the crate demonstrates each capability; a
//! thin `bbtorus` binary exposes the same computations as subcommands.

pub mod arith;
pub mod cd;
pub mod cli;
pub mod complex;
pub mod corpus;
pub mod cover;
pub mod face_ring;
pub mod homology;
pub mod matrix;
pub mod ring;
pub mod snf;

pub use complex::{
    barycentric_subdivision, generate, relative_barycentric_subdivision, ComplexError, FVector,
    Generator, SimplicialComplex,
};
pub use homology::{
    augmented_chain_complex, cohomology_summary, is_acyclic, reduced_homology, HomologySummary,
};
pub use ring::RingSpec;
