//! Homology and cohomology of the infinite cyclic cover.
//!
//! The cellular chain complex of the cover of the torus subcomplex is free
//! over the group ring of the deck group, with one generator in degree `n`
//! per `(n-1)`-simplex and differential `(1 - z)` tensored with the
//! simplicial boundary. Consequently `H_n` of the cover sits in two short
//! exact sequences: the boundaries `B+_{n-1}` of the simplicial complex
//! include as the fixed submodule, the cycles `Z+_{n-1}` appear as the
//! maximal trivial quotient, and a free module over the group ring on the
//! reduced homology `H~_{n-1}` accounts for everything else. Over a field
//! both sequences split, giving the `(a, b)` decomposition into `a` free
//! summands and `b` trivial one-dimensional summands.
//!
//! [`laurent_snf_oracle`] recomputes that decomposition from scratch: it
//! runs Smith normal form over `F[z]` on the actual polynomial matrices
//! `(1 - z) * d` and reads the module structure off the invariant factors
//! with `z` inverted. It shares no code path with the rank bookkeeping of
//! [`field_module_decomposition`], which is what makes the agreement of the
//! two a meaningful test.

use thiserror::Error;

use crate::arith::{EuclideanRing, Field, ModField, PolyRing, RatField, Ring};
use crate::complex::SimplicialComplex;
use crate::face_ring::{quotient_by_beta_summary, GradedModuleSummary, ModuleSummary};
use crate::homology::{
    augmented_chain_complex, cohomology_summary, is_acyclic, reduced_homology, DegreeSummary,
};
use crate::matrix::Matrix;
use crate::ring::RingSpec;
use crate::snf::smith_normal_form;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CoverError {
    #[error("a field is required here, but the ring is {0}")]
    FieldRequired(String),
    #[error("the complex is not rationally acyclic, so the cover has no Euler characteristic")]
    NotRationallyAcyclic,
    #[error("reduced homology does not vanish below degree {wanted}: H~_{failing} is nonzero")]
    HypothesisFails { wanted: usize, failing: isize },
}

/// One degree of the cover's chain complex: the basis (the `(n-1)`-
/// simplices) and the integer matrix `D` whose scaling by `1 - z` is the
/// differential out of this degree.
#[derive(Debug, Clone)]
pub struct CoverDegree {
    pub degree: usize,
    pub base: Vec<Vec<usize>>,
    /// Matrix of `d_{n-1}` on the simplicial side; the cover differential
    /// out of degree `n` is `(1 - z)` times this.
    pub boundary: Matrix<i64>,
}

/// The chain complex of the infinite cyclic cover, presented over the
/// group ring of the deck group.
#[derive(Debug, Clone)]
pub struct CoverChainComplex {
    pub ring: RingSpec,
    pub degrees: Vec<CoverDegree>,
}

impl CoverChainComplex {
    pub fn top_degree(&self) -> usize {
        self.degrees.len() - 1
    }
}

pub fn cover_chain_complex(complex: &SimplicialComplex, ring: &RingSpec) -> CoverChainComplex {
    let data = augmented_chain_complex(complex, ring);
    let degrees = (0..=(data.dim() + 1).max(0))
        .map(|n| CoverDegree {
            degree: n as usize,
            base: data.basis(n - 1).to_vec(),
            boundary: if n == 0 {
                // degree 0 maps to nothing
                Matrix::zero(0, data.rank_of_chain_group(-1))
            } else {
                data.boundary_matrix(n - 1)
            },
        })
        .collect();
    CoverChainComplex {
        ring: ring.clone(),
        degrees,
    }
}

/// Degree-`n` homology of the cover as deck-group module data.
///
/// `group_ring_rank` counts the free summands over the group ring (the
/// free rank of `H~_{n-1}`), `trivial_sub_rank` is the rank of the fixed
/// submodule `B+_{n-1}`, `trivial_quot_rank` the rank of the maximal
/// trivial quotient `Z+_{n-1}`, and `htilde` carries the full reduced
/// homology of the complex one degree down, torsion included. The group is
/// finitely generated over the coefficients exactly when `htilde`
/// vanishes.
#[derive(Debug, Clone, PartialEq)]
pub struct BBHomologyDegree {
    pub degree: usize,
    pub group_ring_rank: usize,
    pub htilde: DegreeSummary,
    pub trivial_sub_rank: usize,
    pub trivial_quot_rank: usize,
    pub finitely_generated: bool,
}

pub fn bb_homology(complex: &SimplicialComplex, ring: &RingSpec) -> Vec<BBHomologyDegree> {
    let homology = reduced_homology(complex, ring);
    let top = (complex.dimension() + 1).max(0) as usize;
    (0..=top)
        .map(|n| {
            let below = homology.degree(n as isize - 1);
            BBHomologyDegree {
                degree: n,
                group_ring_rank: below.free_rank,
                finitely_generated: below.is_zero(),
                trivial_sub_rank: below.b_rank,
                trivial_quot_rank: below.z_rank,
                htilde: below,
            }
        })
        .collect()
}

/// Rank of the cover's degree-`i` homology under the hypothesis that the
/// reduced homology of the complex vanishes strictly below degree `i`. The
/// value is the alternating sum of simplex counts
/// `sum_{j=0..=i} (-1)^{i+j} f_{j-1}`, and the function also recomputes the
/// rank as the kernel rank of the boundary map and insists the two agree.
pub fn bb_homology_ranks_acyclic(
    complex: &SimplicialComplex,
    ring: &RingSpec,
    i: usize,
) -> Result<usize, CoverError> {
    let homology = reduced_homology(complex, ring);
    for j in -1..i as isize {
        if !homology.degree(j).is_zero() {
            return Err(CoverError::HypothesisFails {
                wanted: i,
                failing: j,
            });
        }
    }
    let f = complex.f_vector();
    let mut formula = 0i64;
    for j in 0..=i {
        let sign = if (i + j).is_multiple_of(2) { 1 } else { -1 };
        formula += sign * f.f(j as isize - 1) as i64;
    }
    let direct = homology.degree(i as isize - 1).z_rank as i64;
    assert_eq!(
        formula, direct,
        "alternating-sum rank disagrees with the kernel rank"
    );
    Ok(formula as usize)
}

/// Euler characteristic of the cover, defined when the complex is
/// rationally acyclic: `sum_{i>=0} (-1)^i (i+1) f_i`. The result is
/// checked against the alternating sum of the cover's rational Betti
/// numbers.
pub fn euler_characteristic_cover(complex: &SimplicialComplex) -> Result<i64, CoverError> {
    if !is_acyclic(complex, &RingSpec::Rationals) {
        return Err(CoverError::NotRationallyAcyclic);
    }
    let f = complex.f_vector();
    let mut value = 0i64;
    for i in 0..=complex.dimension().max(0) {
        let sign: i64 = if i.rem_euclid(2) == 0 { 1 } else { -1 };
        value += sign * (i as i64 + 1) * f.f(i) as i64;
    }
    // with all reduced homology gone, the cover's Betti numbers are the
    // cycle ranks one degree down
    let betti_sum: i64 = bb_homology(complex, &RingSpec::Rationals)
        .iter()
        .map(|d| {
            let sign = if d.degree % 2 == 0 { 1 } else { -1 };
            sign * d.trivial_quot_rank as i64
        })
        .sum();
    assert_eq!(value, betti_sum, "Euler characteristic cross-check failed");
    Ok(value)
}

/// Is the homology of the cover finitely generated over the coefficient
/// ring? Finiteness of the complex is structural here, so this is exactly
/// acyclicity.
pub fn is_fg_homology(complex: &SimplicialComplex, ring: &RingSpec) -> bool {
    is_acyclic(complex, ring)
}

/// Module structure of the cover's homology over a field `F`, degree by
/// degree: `a` summands isomorphic to the Laurent polynomial ring and `b`
/// trivial summands `F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldModuleDecomposition {
    pub ring: RingSpec,
    /// `(a, b)` per cover degree starting at 0.
    pub degrees: Vec<(usize, usize)>,
}

pub fn field_module_decomposition(
    complex: &SimplicialComplex,
    field: &RingSpec,
) -> Result<FieldModuleDecomposition, CoverError> {
    field
        .require_field()
        .map_err(|_| CoverError::FieldRequired(field.to_string()))?;
    let degrees = bb_homology(complex, field)
        .iter()
        .map(|d| (d.group_ring_rank, d.trivial_sub_rank))
        .collect();
    Ok(FieldModuleDecomposition {
        ring: field.clone(),
        degrees,
    })
}

/// Recomputes [`field_module_decomposition`] from the raw chain complex of
/// the cover by Smith normal form over `F[z]`.
///
/// Per degree, the rank of the kernel of the outgoing differential is read
/// from the Smith form of `(1 - z) * d_{n-1}`, the incoming differential's
/// Smith form provides the invariant factors, and inverting `z` discards
/// monomial units. Every surviving factor must be an associate of `1 - z`;
/// anything else would contradict the module structure and aborts.
pub fn laurent_snf_oracle(
    complex: &SimplicialComplex,
    field: &RingSpec,
) -> Result<FieldModuleDecomposition, CoverError> {
    match field {
        RingSpec::Rationals => Ok(FieldModuleDecomposition {
            ring: field.clone(),
            degrees: oracle_over(RatField, complex),
        }),
        RingSpec::PrimeField(p) => Ok(FieldModuleDecomposition {
            ring: field.clone(),
            degrees: oracle_over(ModField::new(*p), complex),
        }),
        other => Err(CoverError::FieldRequired(other.to_string())),
    }
}

fn oracle_over<F: Field>(field: F, complex: &SimplicialComplex) -> Vec<(usize, usize)> {
    let data = augmented_chain_complex(complex, &RingSpec::Integers);
    let poly = PolyRing::new(field.clone());
    let one_minus_z = poly.one_minus_z();
    let top = (data.dim() + 1).max(0) as usize;

    // differential out of cover degree n, as a polynomial matrix
    let cover_diff = |n: usize| -> Matrix<crate::arith::Poly<F::Elem>> {
        if n == 0 {
            return Matrix::from_fn(0, data.rank_of_chain_group(-1), |_, _| poly.zero());
        }
        let d = data.boundary_matrix(n as isize - 1);
        d.map(|&e| poly.mul(&poly.from_int(e), &one_minus_z))
    };

    let forms: Vec<_> = (0..=top + 1)
        .map(|n| smith_normal_form(&poly, &cover_diff(n)))
        .collect();

    (0..=top)
        .map(|n| {
            let kernel_rank = forms[n].cols - forms[n].rank();
            let incoming = &forms[n + 1];
            let mut trivial_summands = 0usize;
            for factor in &incoming.invariant_factors {
                let stripped = poly.strip_z_powers(factor);
                if poly.is_unit(&stripped) {
                    continue;
                }
                let (monic, _) = poly.canonical_assoc(&stripped);
                let (z_minus_one, _) = poly.canonical_assoc(&one_minus_z);
                assert_eq!(
                    monic, z_minus_one,
                    "invariant factor of a cover differential is not (1 - z)"
                );
                trivial_summands += 1;
            }
            let free_rank = kernel_rank - incoming.rank();
            (free_rank, trivial_summands)
        })
        .collect()
}

/// Cohomology of the cover in one degree: the fixed subring component (the
/// degree-`n` part of the face ring modulo `beta`) and the cokernel of the
/// comparison map from the torus, which is an infinite product of copies
/// of the reduced cohomology of the complex one degree down and therefore
/// vanishes exactly when that group does.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverCohomologyDegree {
    pub degree: usize,
    pub fixed_subring: ModuleSummary,
    pub cokernel_factor: DegreeSummary,
    pub cokernel_vanishes: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoverCohomologyReport {
    pub ring: RingSpec,
    /// True exactly when the complex is acyclic over the ring: then the
    /// comparison map identifies the whole cohomology ring of the cover
    /// with the face ring modulo `beta`.
    pub ring_isomorphism: bool,
    pub degrees: Vec<CoverCohomologyDegree>,
}

impl CoverCohomologyReport {
    pub fn fixed_subring_summary(&self) -> GradedModuleSummary {
        GradedModuleSummary {
            ring: self.ring.clone(),
            components: self
                .degrees
                .iter()
                .map(|d| d.fixed_subring.clone())
                .collect(),
        }
    }
}

pub fn cover_cohomology_report(
    complex: &SimplicialComplex,
    ring: &RingSpec,
) -> CoverCohomologyReport {
    let quotient = quotient_by_beta_summary(complex, ring);
    let cohomology = cohomology_summary(complex, ring);
    let top = (complex.dimension() + 1).max(0) as usize;
    let degrees = (0..=top)
        .map(|n| {
            let factor = cohomology.degree(n as isize - 1);
            CoverCohomologyDegree {
                degree: n,
                fixed_subring: quotient.component(n),
                cokernel_vanishes: factor.is_zero(),
                cokernel_factor: factor,
            }
        })
        .collect();
    CoverCohomologyReport {
        ring: ring.clone(),
        ring_isomorphism: is_acyclic(complex, ring),
        degrees,
    }
}
