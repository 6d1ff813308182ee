//! Trivial cohomological dimension and the cohomological dimension of
//! Bestvina-Brady groups.
//!
//! The trivial cohomological dimension of a nonempty complex over a
//! principal ideal domain is decided through universal coefficients: some
//! coefficient module detects degree `n` exactly when the unreduced
//! integral homology is nonzero there or has torsion one degree down.
//! Over a field it is simply the top degree with nonzero cohomology. Both
//! computations use unreduced groups, which differ from the reduced ones
//! only in degree zero; that is also why a single point is excluded from
//! the cover formulas below.
//!
//! For a flag complex with at least two vertices the cover is aspherical
//! and classifies the Bestvina-Brady group, whose cohomological dimension
//! over a field or a subring of the rationals equals
//! `max(dim L, 1 + tcd L)`. For non-flag complexes the same number is
//! only bracketed, which is what [`cd_cover_bounds`] reports.

use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::homology::{cohomology_summary, is_acyclic, reduced_homology};
use crate::ring::RingSpec;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CdError {
    #[error("the trivial cohomological dimension of the empty complex is undefined here")]
    EmptyComplex,
    #[error(
        "the complex has {0} vertex/vertices; the cover of a single point is a line and the \
         dimension formulas require at least two vertices"
    )]
    TooFewVertices(usize),
    #[error(
        "not a flag complex, so the cover is not aspherical; apply flag_completion or a \
         barycentric subdivision first"
    )]
    NotFlag,
}

/// Trivial cohomological dimension of the complex over the ring: the top
/// degree in which cohomology with some coefficient module over the ring
/// is nonzero. Unreduced groups are used, so the result is at least zero
/// for every nonempty complex.
pub fn tcd(complex: &SimplicialComplex, ring: &RingSpec) -> Result<usize, CdError> {
    if complex.vertex_count() == 0 {
        return Err(CdError::EmptyComplex);
    }
    match ring {
        RingSpec::Rationals | RingSpec::PrimeField(_) => {
            let cohomology = cohomology_summary(complex, ring);
            let unreduced =
                |n: isize| -> usize { cohomology.degree(n).free_rank + usize::from(n == 0) };
            Ok((0..=complex.dimension())
                .filter(|&n| unreduced(n) > 0)
                .max()
                .unwrap_or(0) as usize)
        }
        RingSpec::Integers | RingSpec::IntegersInverted(_) => {
            let homology = reduced_homology(complex, ring);
            let nonzero = |n: isize| -> bool {
                let s = homology.degree(n);
                s.free_rank + usize::from(n == 0) > 0
            };
            let has_torsion = |n: isize| -> bool { !homology.degree(n).torsion.is_empty() };
            Ok((0..=complex.dimension() + 1)
                .filter(|&n| nonzero(n) || has_torsion(n - 1))
                .max()
                .unwrap_or(0) as usize)
        }
    }
}

/// Trivial cohomological dimension of the infinite cyclic cover:
/// `max(dim L, 1 + tcd L)` for complexes with at least two vertices.
pub fn tcd_cover(complex: &SimplicialComplex, ring: &RingSpec) -> Result<usize, CdError> {
    if complex.vertex_count() < 2 {
        return Err(CdError::TooFewVertices(complex.vertex_count()));
    }
    let dim = complex.dimension() as usize;
    Ok(dim.max(1 + tcd(complex, ring)?))
}

/// Bounds on the cohomological dimension of the cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CdBounds {
    pub lower: usize,
    pub upper: usize,
    pub exact: Option<usize>,
}

/// The sandwich `dim L <= tcd <= cd <= dim L + 1` for the cover, with the
/// exact value filled in when acyclicity pins it to `dim L` or the lower
/// bound already reaches `dim L + 1`.
pub fn cd_cover_bounds(complex: &SimplicialComplex, ring: &RingSpec) -> Result<CdBounds, CdError> {
    if complex.vertex_count() < 2 {
        return Err(CdError::TooFewVertices(complex.vertex_count()));
    }
    let dim = complex.dimension() as usize;
    let tcd_cover = tcd_cover(complex, ring)?;
    let lower = dim.max(tcd_cover);
    let upper = dim + 1;
    let exact = if is_acyclic(complex, ring) {
        Some(dim)
    } else if tcd_cover == dim + 1 {
        Some(tcd_cover)
    } else {
        None
    };
    Ok(CdBounds {
        lower,
        upper,
        exact,
    })
}

/// Full dimension report for a Bestvina-Brady group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CdReport {
    pub ring: RingSpec,
    pub dim: isize,
    pub tcd_complex: usize,
    pub tcd_cover: usize,
    pub cd_cover_lower: usize,
    pub cd_cover_upper: usize,
    pub cd_exact: usize,
    pub is_flag: bool,
    pub is_acyclic: bool,
    pub vertex_count: usize,
}

/// Cohomological dimension of the Bestvina-Brady group of a flag complex
/// with at least two vertices, over a field or a subring of the rationals
/// (every supported ring qualifies): `max(dim L, 1 + tcd L)`, which also
/// equals the group's trivial cohomological dimension. The report carries
/// the intermediate quantities; its cover bounds are collapsed onto the
/// exact value.
pub fn cd_bb_group(complex: &SimplicialComplex, ring: &RingSpec) -> Result<CdReport, CdError> {
    if complex.vertex_count() < 2 {
        return Err(CdError::TooFewVertices(complex.vertex_count()));
    }
    if !complex.is_flag() {
        return Err(CdError::NotFlag);
    }
    let dim = complex.dimension();
    let tcd_complex = tcd(complex, ring)?;
    let cd = (dim as usize).max(1 + tcd_complex);
    Ok(CdReport {
        ring: ring.clone(),
        dim,
        tcd_complex,
        tcd_cover: cd,
        cd_cover_lower: cd,
        cd_cover_upper: cd,
        cd_exact: cd,
        is_flag: true,
        is_acyclic: is_acyclic(complex, ring),
        vertex_count: complex.vertex_count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{generate, Generator};

    fn gen(spec: &str) -> SimplicialComplex {
        generate(&Generator::parse(spec).unwrap()).unwrap()
    }

    fn ring(token: &str) -> RingSpec {
        RingSpec::parse(token).unwrap()
    }

    #[test]
    fn tcd_of_rp2_detects_the_torsion() {
        let c = gen("rp2_six");
        assert_eq!(tcd(&c, &ring("z")).unwrap(), 2);
        assert_eq!(tcd(&c, &ring("f2")).unwrap(), 2);
        assert_eq!(tcd(&c, &ring("q")).unwrap(), 0);
        assert_eq!(tcd(&c, &ring("f3")).unwrap(), 0);
        assert_eq!(tcd(&c, &ring("z-inv:2")).unwrap(), 0);
        assert_eq!(tcd(&c, &ring("z-inv:3")).unwrap(), 2);
    }

    #[test]
    fn tcd_of_a_point_and_a_circle() {
        assert_eq!(tcd(&gen("simplex(0)"), &ring("z")).unwrap(), 0);
        for token in ["z", "q", "f2", "f5", "z-inv:2,3"] {
            assert_eq!(
                tcd(&gen("simplex_boundary(2)"), &ring(token)).unwrap(),
                1,
                "{token}"
            );
        }
    }

    #[test]
    fn tcd_of_the_empty_complex_is_an_error() {
        assert_eq!(
            tcd(&SimplicialComplex::empty(), &ring("z")).unwrap_err(),
            CdError::EmptyComplex
        );
    }

    #[test]
    fn tcd_cover_examples() {
        assert_eq!(tcd_cover(&gen("points(2)"), &ring("z")).unwrap(), 1);
        assert_eq!(
            tcd_cover(&gen("simplex_boundary(2)"), &ring("q")).unwrap(),
            2
        );
        assert_eq!(tcd_cover(&gen("rp2_six"), &ring("z")).unwrap(), 3);
        assert_eq!(
            tcd_cover(&gen("simplex(0)"), &ring("z")).unwrap_err(),
            CdError::TooFewVertices(1)
        );
    }

    #[test]
    fn cover_bounds_close_in_the_acyclic_case() {
        let bounds = cd_cover_bounds(&gen("simplex(2)"), &ring("z")).unwrap();
        assert_eq!(bounds.exact, Some(2));
        let bounds = cd_cover_bounds(&gen("rp2_six"), &ring("f3")).unwrap();
        assert_eq!(bounds.exact, Some(2));
    }

    #[test]
    fn cover_bounds_close_when_tcd_hits_the_ceiling() {
        let bounds = cd_cover_bounds(&gen("simplex_boundary(2)"), &ring("q")).unwrap();
        assert_eq!(bounds.exact, Some(2));
        assert_eq!((bounds.lower, bounds.upper), (2, 2 /* dim + 1 */));
    }

    #[test]
    fn cover_bounds_can_stay_open() {
        // over F_2 the projective plane is neither acyclic nor at the
        // ceiling minus one: tcd_cover = 3 = dim + 1, so it closes there
        let bounds = cd_cover_bounds(&gen("rp2_six"), &ring("f2")).unwrap();
        assert_eq!(bounds.exact, Some(3));
    }

    #[test]
    fn bb_group_of_a_single_edge_is_infinite_cyclic() {
        let report = cd_bb_group(&gen("simplex(1)"), &ring("z")).unwrap();
        assert_eq!(report.cd_exact, 1);
    }

    #[test]
    fn bb_group_of_the_square() {
        let report = cd_bb_group(&gen("cycle(4)"), &ring("q")).unwrap();
        assert_eq!(report.cd_exact, 2);
    }

    #[test]
    fn bb_group_of_the_subdivided_projective_plane() {
        let c = gen("barycentric(rp2_six)");
        assert_eq!(cd_bb_group(&c, &ring("z")).unwrap().cd_exact, 3);
        assert_eq!(cd_bb_group(&c, &ring("q")).unwrap().cd_exact, 2);
    }

    #[test]
    fn bb_group_preconditions() {
        assert_eq!(
            cd_bb_group(&gen("simplex_boundary(2)"), &ring("z")).unwrap_err(),
            CdError::NotFlag
        );
        assert_eq!(
            cd_bb_group(&gen("simplex(0)"), &ring("z")).unwrap_err(),
            CdError::TooFewVertices(1)
        );
    }

    #[test]
    fn tcd_agrees_between_cochain_and_homological_routes_over_fields() {
        for spec in [
            "rp2_six",
            "cycle(5)",
            "points(3)",
            "simplex(3)",
            "simplex_boundary(3)",
        ] {
            let c = gen(spec);
            for token in ["q", "f2", "f3"] {
                let field = ring(token);
                let direct = tcd(&c, &field).unwrap();
                // over a field, homology and cohomology have equal ranks
                let homology = reduced_homology(&c, &field);
                let from_homology = (0..=c.dimension())
                    .filter(|&n| homology.degree(n).free_rank + usize::from(n == 0) > 0)
                    .max()
                    .unwrap_or(0) as usize;
                assert_eq!(direct, from_homology, "{spec} over {token}");
            }
        }
    }

    #[test]
    fn localization_only_lowers_tcd() {
        for spec in ["rp2_six", "cycle(5)", "simplex(3)", "simplex_boundary(3)"] {
            let c = gen(spec);
            let base = tcd(&c, &ring("z")).unwrap();
            for token in ["z-inv:2", "z-inv:3", "z-inv:2,3,5"] {
                assert!(tcd(&c, &ring(token)).unwrap() <= base, "{spec} {token}");
            }
        }
    }

    #[test]
    fn rational_cd_never_exceeds_integral_cd() {
        for spec in [
            "cycle(4)",
            "simplex(1)",
            "barycentric(rp2_six)",
            "barycentric(simplex_boundary(2))",
        ] {
            let c = gen(spec);
            let over_q = cd_bb_group(&c, &ring("q")).unwrap().cd_exact;
            let over_z = cd_bb_group(&c, &ring("z")).unwrap().cd_exact;
            assert!(over_q <= over_z, "{spec}");
        }
    }

    #[test]
    fn acyclic_flag_complexes_agree_with_the_cover_bound() {
        for spec in ["simplex(2)", "simplex(3)", "barycentric(simplex(2))"] {
            let c = gen(spec);
            let report = cd_bb_group(&c, &ring("z")).unwrap();
            assert!(report.is_acyclic);
            assert_eq!(report.cd_exact, c.dimension() as usize);
            let bounds = cd_cover_bounds(&c, &ring("z")).unwrap();
            assert_eq!(bounds.exact, Some(report.cd_exact));
        }
    }

    #[test]
    fn barycentric_subdivision_preserves_the_answer() {
        use crate::complex::barycentric_subdivision;
        for spec in ["rp2_six", "simplex_boundary(2)", "cycle(4)"] {
            let c = gen(spec);
            let sd = barycentric_subdivision(&c);
            for token in ["z", "q", "f2", "f3"] {
                let r = ring(token);
                let expected = (c.dimension() as usize).max(1 + tcd(&c, &r).unwrap());
                assert_eq!(
                    cd_bb_group(&sd, &r).unwrap().cd_exact,
                    expected,
                    "{spec} over {token}"
                );
            }
        }
    }
}
