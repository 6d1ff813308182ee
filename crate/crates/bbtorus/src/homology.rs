//! Augmented simplicial chain complexes and reduced (co)homology.
//!
//! Everything here is reduced: the chain complex carries the empty simplex
//! in degree -1 and the augmentation as its degree-0 boundary map. Degree
//! -1 is a genuine degree in every report, so the empty complex has
//! nontrivial homology there and is never acyclic, while a single point is
//! always acyclic.
//!
//! Over the integers and their localizations the torsion is extracted by
//! Smith normal form; over the fields, ranks come from row reduction.

use num::BigInt;

use crate::arith::IntRing;
use crate::complex::SimplicialComplex;
use crate::matrix::{is_zero_matrix, mat_mul, rank_over_spec, Matrix};
use crate::ring::RingSpec;
use crate::snf::torsion_over_spec;

/// The augmented chain complex of a simplicial complex: graded bases (the
/// simplices, including the empty one in degree -1) and integer boundary
/// matrices with the alternating-sum signs induced by the global vertex
/// order.
#[derive(Debug, Clone)]
pub struct ChainComplexData {
    ring: RingSpec,
    dim: isize,
    /// `bases[d + 1]` lists the `d`-simplices in canonical order.
    bases: Vec<Vec<Vec<usize>>>,
    /// `boundaries[k]` is the matrix of `d_k : C_k -> C_{k-1}` for
    /// `k = 0, ..., dim`; the degree-0 boundary is the augmentation.
    boundaries: Vec<Matrix<i64>>,
}

impl ChainComplexData {
    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn dim(&self) -> isize {
        self.dim
    }

    pub fn basis(&self, d: isize) -> &[Vec<usize>] {
        static EMPTY: &[Vec<usize>] = &[];
        if d < -1 || d > self.dim {
            return EMPTY;
        }
        &self.bases[(d + 1) as usize]
    }

    pub fn rank_of_chain_group(&self, d: isize) -> usize {
        self.basis(d).len()
    }

    /// The boundary matrix `d_k`, with zero-sized shapes outside the
    /// complex's degree range.
    pub fn boundary_matrix(&self, k: isize) -> Matrix<i64> {
        if (0..=self.dim).contains(&k) {
            self.boundaries[k as usize].clone()
        } else {
            let rows = self.rank_of_chain_group(k - 1);
            let cols = self.rank_of_chain_group(k);
            Matrix::zero(rows, cols)
        }
    }

    /// The coboundary matrix raising degree `d -> d + 1`: the transpose of
    /// `d_{d+1}`.
    pub fn coboundary_matrix(&self, d: isize) -> Matrix<i64> {
        self.boundary_matrix(d + 1).transpose()
    }
}

/// Assembles the augmented chain complex and verifies that consecutive
/// boundary maps compose to zero.
pub fn augmented_chain_complex(complex: &SimplicialComplex, ring: &RingSpec) -> ChainComplexData {
    let dim = complex.dimension();
    let mut bases: Vec<Vec<Vec<usize>>> = Vec::new();
    for d in -1..=dim {
        bases.push(complex.simplices_of_dim(d).into_iter().cloned().collect());
    }
    let mut boundaries = Vec::new();
    for k in 0..=dim {
        let rows_basis = &bases[k as usize];
        let cols_basis = &bases[(k + 1) as usize];
        let row_index: std::collections::BTreeMap<&Vec<usize>, usize> =
            rows_basis.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut m = Matrix::zero(rows_basis.len(), cols_basis.len());
        for (j, simplex) in cols_basis.iter().enumerate() {
            for skip in 0..simplex.len() {
                let face: Vec<usize> = simplex
                    .iter()
                    .enumerate()
                    .filter(|(pos, _)| *pos != skip)
                    .map(|(_, &v)| v)
                    .collect();
                let i = row_index[&face];
                let sign = if skip % 2 == 0 { 1 } else { -1 };
                m.set(i, j, sign);
            }
        }
        boundaries.push(m);
    }
    let data = ChainComplexData {
        ring: ring.clone(),
        dim,
        bases,
        boundaries,
    };
    for k in 1..=dim {
        let product = mat_mul(
            &IntRing,
            &data.boundary_matrix(k - 1).lift(&IntRing),
            &data.boundary_matrix(k).lift(&IntRing),
        );
        assert!(
            is_zero_matrix(&IntRing, &product),
            "boundary maps do not compose to zero in degree {k}"
        );
    }
    data
}

/// One degree of a homology or cohomology report.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeSummary {
    pub degree: isize,
    pub free_rank: usize,
    /// Nonunit invariant factors; empty over a field.
    pub torsion: Vec<BigInt>,
    /// Rank of the (co)cycles in this degree.
    pub z_rank: usize,
    /// Rank of the (co)boundaries landing in this degree.
    pub b_rank: usize,
}

impl DegreeSummary {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Rendering such as `0`, `R^2`, `R + R/2 + R/12`.
    pub fn group_string(&self, ring: &RingSpec) -> String {
        let symbol = match ring {
            RingSpec::Integers => "Z".to_string(),
            RingSpec::Rationals => "Q".to_string(),
            RingSpec::PrimeField(p) => format!("F_{p}"),
            RingSpec::IntegersInverted(_) => "R".to_string(),
        };
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push(symbol.clone()),
            r => parts.push(format!("{symbol}^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("{symbol}/{d}"));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// Per-degree homology (or cohomology) of a complex over a fixed ring,
/// covering degrees -1 through the dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct HomologySummary {
    pub ring: RingSpec,
    pub degrees: Vec<DegreeSummary>,
}

impl HomologySummary {
    /// The summary in a given degree; degrees outside the stored range are
    /// zero with zero cycle and boundary ranks.
    pub fn degree(&self, d: isize) -> DegreeSummary {
        self.degrees
            .iter()
            .find(|s| s.degree == d)
            .cloned()
            .unwrap_or(DegreeSummary {
                degree: d,
                free_rank: 0,
                torsion: Vec::new(),
                z_rank: 0,
                b_rank: 0,
            })
    }

    pub fn is_zero_everywhere(&self) -> bool {
        self.degrees.iter().all(|s| s.is_zero())
    }

    /// Largest degree with nonzero group, if any.
    pub fn top_nonzero_degree(&self) -> Option<isize> {
        self.degrees
            .iter()
            .filter(|s| !s.is_zero())
            .map(|s| s.degree)
            .max()
    }
}

fn boundary_ranks(data: &ChainComplexData, spec: &RingSpec) -> Vec<usize> {
    // ranks of d_k for k = 0..=dim, over the fraction field or prime field
    (0..=data.dim())
        .map(|k| rank_over_spec(spec, &data.boundary_matrix(k)))
        .collect()
}

fn rank_at(ranks: &[usize], k: isize) -> usize {
    if k < 0 || k as usize >= ranks.len() {
        0
    } else {
        ranks[k as usize]
    }
}

/// Reduced homology of the complex over the chosen ring.
pub fn reduced_homology(complex: &SimplicialComplex, ring: &RingSpec) -> HomologySummary {
    let data = augmented_chain_complex(complex, ring);
    let ranks = boundary_ranks(&data, ring);
    let mut degrees = Vec::new();
    for d in -1..=data.dim() {
        let z_rank = data.rank_of_chain_group(d) - rank_at(&ranks, d);
        let b_rank = rank_at(&ranks, d + 1);
        let torsion = if d < data.dim() {
            torsion_over_spec(ring, &data.boundary_matrix(d + 1))
        } else {
            Vec::new()
        };
        degrees.push(DegreeSummary {
            degree: d,
            free_rank: z_rank - b_rank,
            torsion,
            z_rank,
            b_rank,
        });
    }
    HomologySummary {
        ring: ring.clone(),
        degrees,
    }
}

/// Reduced cohomology, computed from the transposed boundary matrices and
/// reported over a PID as free part plus torsion.
pub fn cohomology_summary(complex: &SimplicialComplex, ring: &RingSpec) -> HomologySummary {
    let data = augmented_chain_complex(complex, ring);
    // ranks[i] = rank of the coboundary map out of degree i - 1
    let cobounds: Vec<Matrix<i64>> = (-1..=data.dim())
        .map(|d| data.coboundary_matrix(d))
        .collect();
    let ranks: Vec<usize> = cobounds.iter().map(|m| rank_over_spec(ring, m)).collect();
    let rank_out = |d: isize| -> usize {
        let idx = d + 1;
        if idx < 0 || idx as usize >= ranks.len() {
            0
        } else {
            ranks[idx as usize]
        }
    };
    let mut degrees = Vec::new();
    for d in -1..=data.dim() {
        let z_rank = data.rank_of_chain_group(d) - rank_out(d);
        let b_rank = rank_out(d - 1);
        let torsion = if d >= 0 {
            torsion_over_spec(ring, &data.coboundary_matrix(d - 1))
        } else {
            Vec::new()
        };
        degrees.push(DegreeSummary {
            degree: d,
            free_rank: z_rank - b_rank,
            torsion,
            z_rank,
            b_rank,
        });
    }
    HomologySummary {
        ring: ring.clone(),
        degrees,
    }
}

/// Is the complex acyclic over the ring: does its reduced homology vanish
/// in every degree including -1?
pub fn is_acyclic(complex: &SimplicialComplex, ring: &RingSpec) -> bool {
    reduced_homology(complex, ring).is_zero_everywhere()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{generate, Generator};

    fn gen(spec: &str) -> SimplicialComplex {
        generate(&Generator::parse(spec).unwrap()).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn chain_complex_of_a_point() {
        let data = augmented_chain_complex(&gen("simplex(0)"), &RingSpec::Integers);
        assert_eq!(data.dim(), 0);
        assert_eq!(data.basis(-1).len(), 1);
        assert_eq!(data.basis(0).len(), 1);
        let aug = data.boundary_matrix(0);
        assert_eq!((aug.rows(), aug.cols()), (1, 1));
        assert_eq!(*aug.at(0, 0), 1);
    }

    #[test]
    fn chain_complex_of_the_empty_complex() {
        let data = augmented_chain_complex(&SimplicialComplex::empty(), &RingSpec::Integers);
        assert_eq!(data.dim(), -1);
        assert_eq!(data.basis(-1).len(), 1);
        assert_eq!(data.basis(0).len(), 0);
    }

    #[test]
    fn circle_boundary_matrix_has_rank_two() {
        let data = augmented_chain_complex(&gen("simplex_boundary(2)"), &RingSpec::Integers);
        let d1 = data.boundary_matrix(1);
        assert_eq!((d1.rows(), d1.cols()), (3, 3));
        assert_eq!(rank_over_spec(&RingSpec::Rationals, &d1), 2);
    }

    #[test]
    fn homology_of_the_circle() {
        let h = reduced_homology(&gen("simplex_boundary(2)"), &RingSpec::Integers);
        assert!(h.degree(0).is_zero());
        assert_eq!(h.degree(1).free_rank, 1);
        assert!(h.degree(1).torsion.is_empty());
        assert!(h.degree(-1).is_zero());
    }

    #[test]
    fn homology_of_rp2_over_z() {
        let h = reduced_homology(&gen("rp2_six"), &RingSpec::Integers);
        assert!(h.degree(0).is_zero());
        assert_eq!(h.degree(1).free_rank, 0);
        assert_eq!(h.degree(1).torsion, vec![big(2)]);
        assert!(h.degree(2).is_zero());
    }

    #[test]
    fn homology_of_rp2_over_fields_and_localizations() {
        let c = gen("rp2_six");
        let f2 = reduced_homology(&c, &RingSpec::PrimeField(2));
        assert_eq!(f2.degree(1).free_rank, 1);
        assert_eq!(f2.degree(2).free_rank, 1);
        let f3 = reduced_homology(&c, &RingSpec::PrimeField(3));
        assert!(f3.is_zero_everywhere());
        let q = reduced_homology(&c, &RingSpec::Rationals);
        assert!(q.is_zero_everywhere());
        let half = reduced_homology(&c, &RingSpec::integers_inverted([2]).unwrap());
        assert!(half.is_zero_everywhere());
        let third = reduced_homology(&c, &RingSpec::integers_inverted([3]).unwrap());
        assert_eq!(third.degree(1).torsion, vec![big(2)]);
    }

    #[test]
    fn empty_complex_has_homology_in_degree_minus_one() {
        let h = reduced_homology(&SimplicialComplex::empty(), &RingSpec::Rationals);
        assert_eq!(h.degree(-1).free_rank, 1);
        assert!(!h.is_zero_everywhere());
    }

    #[test]
    fn acyclicity() {
        assert!(is_acyclic(&gen("simplex(2)"), &RingSpec::Integers));
        assert!(is_acyclic(&gen("simplex(0)"), &RingSpec::Integers));
        assert!(!is_acyclic(
            &SimplicialComplex::empty(),
            &RingSpec::Integers
        ));
        assert!(!is_acyclic(&gen("rp2_six"), &RingSpec::PrimeField(2)));
        assert!(is_acyclic(&gen("rp2_six"), &RingSpec::PrimeField(3)));
        assert!(!is_acyclic(&gen("points(2)"), &RingSpec::Rationals));
    }

    #[test]
    fn cohomology_of_the_circle_and_rp2() {
        let h = cohomology_summary(&gen("simplex_boundary(2)"), &RingSpec::Integers);
        assert_eq!(h.degree(1).free_rank, 1);
        assert!(h.degree(1).torsion.is_empty());

        // torsion moves up one degree in cohomology
        let h = cohomology_summary(&gen("rp2_six"), &RingSpec::Integers);
        assert!(h.degree(1).is_zero());
        assert_eq!(h.degree(2).free_rank, 0);
        assert_eq!(h.degree(2).torsion, vec![big(2)]);
    }

    #[test]
    fn cohomology_of_a_cone_vanishes() {
        let h = cohomology_summary(&gen("simplex(2)"), &RingSpec::PrimeField(5));
        assert!(h.is_zero_everywhere());
    }

    #[test]
    fn field_summaries_satisfy_rank_bookkeeping() {
        for spec in ["rp2_six", "cycle(5)", "points(3)", "simplex(3)"] {
            for ring in [
                RingSpec::Rationals,
                RingSpec::PrimeField(2),
                RingSpec::PrimeField(3),
            ] {
                let h = reduced_homology(&gen(spec), &ring);
                for d in &h.degrees {
                    assert!(d.torsion.is_empty());
                    assert_eq!(d.free_rank, d.z_rank - d.b_rank);
                }
            }
        }
    }

    #[test]
    fn euler_characteristic_agreement() {
        for spec in [
            "rp2_six",
            "cycle(5)",
            "points(3)",
            "simplex(3)",
            "simplex_boundary(3)",
        ] {
            let c = gen(spec);
            let h = reduced_homology(&c, &RingSpec::Rationals);
            let from_homology: i64 = h
                .degrees
                .iter()
                .map(|s| {
                    let sign = if s.degree.rem_euclid(2) == 0 { 1 } else { -1 };
                    sign * s.free_rank as i64
                })
                .sum();
            assert_eq!(c.f_vector().reduced_euler(), from_homology, "{spec}");
        }
    }

    #[test]
    fn universal_coefficients_for_rp2() {
        let c = gen("rp2_six");
        let z = reduced_homology(&c, &RingSpec::Integers);
        for p in [2u64, 3, 5] {
            let fp = reduced_homology(&c, &RingSpec::PrimeField(p));
            for d in -1..=c.dimension() {
                let p_torsion = |deg: isize| {
                    z.degree(deg)
                        .torsion
                        .iter()
                        .filter(|t| (*t % BigInt::from(p)) == BigInt::from(0))
                        .count()
                };
                let expected = z.degree(d).free_rank + p_torsion(d) + p_torsion(d - 1);
                assert_eq!(fp.degree(d).free_rank, expected, "p={p} degree {d}");
            }
        }
    }
}
