//! The exterior face ring of a simplicial complex.
//!
//! Degree-`n` elements are alternating functions on `n`-tuples of vertices
//! that vanish off the simplices of the complex; equivalently, coefficient
//! vectors indexed by the `(n-1)`-simplices in their canonical orientation.
//! The multiplication is the shuffle product. This ring is the cohomology
//! ring of the torus subcomplex attached to the complex, with the degree
//! shifted by one relative to simplicial degrees.
//!
//! The distinguished degree-one element `beta` takes the value one on every
//! vertex. Left multiplication by `beta` is a differential and its matrix
//! in the dual bases coincides with the augmented simplicial coboundary;
//! the quotient by the ideal `(beta)` computes the fixed subring of the
//! cover's cohomology.

use std::collections::BTreeMap;
use std::sync::Arc;

use itertools::Itertools;
use num::BigInt;
use thiserror::Error;

use crate::arith::{IntRing, ModField, RatField, Ring};
use crate::complex::SimplicialComplex;
use crate::matrix::{rank_over_spec, Matrix};
use crate::ring::RingSpec;
use crate::snf::{coprime_part, smith_normal_form_with_transform, SmithForm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FaceRingError {
    #[error("`{0}` is not a simplex of the complex")]
    NotASimplex(String),
    #[error("elements live over different complexes")]
    MismatchedComplex,
    #[error("elements live over different coefficient rings")]
    MismatchedRing,
    #[error("coefficient ring {spec} cannot host {arithmetic} arithmetic")]
    IncompatibleSpec { spec: String, arithmetic: String },
}

/// A homogeneous element of the exterior face ring: one coefficient per
/// canonically oriented simplex of dimension `degree - 1`. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct ExteriorElement<R: Ring> {
    complex: Arc<SimplicialComplex>,
    ring: R,
    degree: usize,
    values: BTreeMap<Vec<usize>, R::Elem>,
}

impl<R: Ring> ExteriorElement<R> {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn coefficient(&self, simplex: &[usize]) -> R::Elem {
        self.values
            .get(simplex)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn support(&self) -> impl Iterator<Item = (&Vec<usize>, &R::Elem)> {
        self.values.iter()
    }
}

/// The exterior face ring of a fixed complex over a fixed coefficient ring.
#[derive(Debug, Clone)]
pub struct FaceRing<R: Ring> {
    complex: Arc<SimplicialComplex>,
    ring: R,
}

impl<R: Ring> FaceRing<R> {
    pub fn new(complex: Arc<SimplicialComplex>, ring: R) -> Self {
        FaceRing { complex, ring }
    }

    pub fn complex(&self) -> &Arc<SimplicialComplex> {
        &self.complex
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// Top degree with a nonzero component: one more than the dimension.
    pub fn top_degree(&self) -> usize {
        (self.complex.dimension() + 1).max(0) as usize
    }

    pub fn zero(&self, degree: usize) -> ExteriorElement<R> {
        ExteriorElement {
            complex: Arc::clone(&self.complex),
            ring: self.ring.clone(),
            degree,
            values: BTreeMap::new(),
        }
    }

    fn element(&self, degree: usize, values: BTreeMap<Vec<usize>, R::Elem>) -> ExteriorElement<R> {
        let values = values
            .into_iter()
            .filter(|(_, c)| !self.ring.is_zero(c))
            .collect();
        ExteriorElement {
            complex: Arc::clone(&self.complex),
            ring: self.ring.clone(),
            degree,
            values,
        }
    }

    fn check(&self, f: &ExteriorElement<R>) -> Result<(), FaceRingError> {
        if *f.complex != *self.complex {
            return Err(FaceRingError::MismatchedComplex);
        }
        if f.ring != self.ring {
            return Err(FaceRingError::MismatchedRing);
        }
        Ok(())
    }

    /// The dual basis element of a simplex: the indicator of its canonical
    /// orientation, of degree one more than the simplex dimension.
    pub fn dual_basis_element(
        &self,
        simplex: &[usize],
    ) -> Result<ExteriorElement<R>, FaceRingError> {
        let mut key = simplex.to_vec();
        key.sort_unstable();
        if !self.complex.contains(&key) {
            return Err(FaceRingError::NotASimplex(
                self.complex.labels_of(&key).join(" "),
            ));
        }
        let degree = key.len();
        Ok(self.element(degree, BTreeMap::from([(key, self.ring.one())])))
    }

    pub fn dual_basis_by_labels(
        &self,
        labels: &[&str],
    ) -> Result<ExteriorElement<R>, FaceRingError> {
        let tuple: Option<Vec<usize>> = labels
            .iter()
            .map(|l| self.complex.vertex_index(l))
            .collect();
        let tuple = tuple.ok_or_else(|| FaceRingError::NotASimplex(labels.join(" ")))?;
        self.dual_basis_element(&tuple)
    }

    /// The degree-one element taking the value one on every vertex.
    pub fn beta(&self) -> ExteriorElement<R> {
        let values = self
            .complex
            .simplices_of_dim(0)
            .into_iter()
            .map(|v| (v.clone(), self.ring.one()))
            .collect();
        self.element(1, values)
    }

    pub fn add(
        &self,
        f: &ExteriorElement<R>,
        g: &ExteriorElement<R>,
    ) -> Result<ExteriorElement<R>, FaceRingError> {
        self.check(f)?;
        self.check(g)?;
        assert_eq!(f.degree, g.degree, "adding elements of different degrees");
        let mut values = f.values.clone();
        for (k, c) in &g.values {
            let sum = match values.get(k) {
                Some(existing) => self.ring.add(existing, c),
                None => c.clone(),
            };
            values.insert(k.clone(), sum);
        }
        Ok(self.element(f.degree, values))
    }

    pub fn scale(&self, c: &R::Elem, f: &ExteriorElement<R>) -> ExteriorElement<R> {
        let values = f
            .values
            .iter()
            .map(|(k, v)| (k.clone(), self.ring.mul(c, v)))
            .collect();
        self.element(f.degree, values)
    }

    pub fn neg(&self, f: &ExteriorElement<R>) -> ExteriorElement<R> {
        self.scale(&self.ring.neg(&self.ring.one()), f)
    }

    pub fn sub(
        &self,
        f: &ExteriorElement<R>,
        g: &ExteriorElement<R>,
    ) -> Result<ExteriorElement<R>, FaceRingError> {
        self.add(f, &self.neg(g))
    }

    /// The shuffle product. The value on an oriented simplex is the signed
    /// sum over all splittings of its vertex tuple into a block for each
    /// factor; blocks that do not span a simplex contribute nothing, which
    /// is exactly the quotient by the non-face ideal.
    pub fn shuffle_product(
        &self,
        f: &ExteriorElement<R>,
        g: &ExteriorElement<R>,
    ) -> Result<ExteriorElement<R>, FaceRingError> {
        self.check(f)?;
        self.check(g)?;
        let degree = f.degree + g.degree;
        let mut values = BTreeMap::new();
        for simplex in self.complex.simplices_of_dim(degree as isize - 1) {
            let mut acc = self.ring.zero();
            for positions in (0..degree).combinations(f.degree) {
                let left: Vec<usize> = positions.iter().map(|&p| simplex[p]).collect();
                let Some(cf) = f.values.get(&left) else {
                    continue;
                };
                let right: Vec<usize> = (0..degree)
                    .filter(|p| !positions.contains(p))
                    .map(|p| simplex[p])
                    .collect();
                let Some(cg) = g.values.get(&right) else {
                    continue;
                };
                // sign of the shuffle: inversions between the two blocks
                let inversions: usize = positions.iter().enumerate().map(|(k, &p)| p - k).sum();
                let term = self.ring.mul(cf, cg);
                let term = if inversions.is_multiple_of(2) {
                    term
                } else {
                    self.ring.neg(&term)
                };
                acc = self.ring.add(&acc, &term);
            }
            if !self.ring.is_zero(&acc) {
                values.insert(simplex.clone(), acc);
            }
        }
        Ok(self.element(degree, values))
    }

    /// Matrix of left multiplication by `beta` from degree `n` to degree
    /// `n + 1`, in the dual bases: rows are indexed by the `n`-simplices
    /// and columns by the `(n-1)`-simplices, in canonical order. This is
    /// computed by genuinely expanding shuffle products.
    pub fn beta_mult_matrix(&self, n: usize) -> Matrix<R::Elem> {
        let beta = self.beta();
        let source = self.complex.simplices_of_dim(n as isize - 1);
        let target = self.complex.simplices_of_dim(n as isize);
        let target_index: BTreeMap<&Vec<usize>, usize> =
            target.iter().enumerate().map(|(i, t)| (*t, i)).collect();
        let mut m = Matrix::from_fn(target.len(), source.len(), |_, _| self.ring.zero());
        for (j, simplex) in source.iter().enumerate() {
            let dual = self
                .dual_basis_element(simplex)
                .expect("basis simplex is in the complex");
            let image = self
                .shuffle_product(&beta, &dual)
                .expect("same ring and complex");
            for (t, c) in image.support() {
                m.set(target_index[t], j, c.clone());
            }
        }
        m
    }

    /// Coefficient vector of a degree-`n` element over the canonical basis
    /// of `(n-1)`-simplices.
    pub fn coefficient_vector(&self, f: &ExteriorElement<R>) -> Vec<R::Elem> {
        self.complex
            .simplices_of_dim(f.degree as isize - 1)
            .into_iter()
            .map(|s| f.coefficient(s))
            .collect()
    }

    /// Rebuilds an element from a coefficient vector over the canonical
    /// basis of `(degree-1)`-simplices.
    pub fn element_from_vector(&self, degree: usize, coeffs: &[R::Elem]) -> ExteriorElement<R> {
        let basis = self.complex.simplices_of_dim(degree as isize - 1);
        assert_eq!(basis.len(), coeffs.len(), "wrong coefficient count");
        let values = basis
            .into_iter()
            .zip(coeffs.iter())
            .map(|(s, c)| (s.clone(), c.clone()))
            .collect();
        self.element(degree, values)
    }

    pub fn display_element(&self, f: &ExteriorElement<R>) -> String {
        if f.values.is_empty() {
            return "0".to_string();
        }
        f.values
            .iter()
            .map(|(k, c)| {
                let labels = self.complex.labels_of(k).join(" ");
                let c = self.ring.display(c);
                if c == "1" {
                    format!("d({labels})")
                } else {
                    format!("{c}*d({labels})")
                }
            })
            .join(" + ")
    }
}

/// Free rank and torsion of one graded component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleSummary {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl ModuleSummary {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

/// A graded module reported degree by degree, from degree 0 upward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedModuleSummary {
    pub ring: RingSpec,
    pub components: Vec<ModuleSummary>,
}

impl GradedModuleSummary {
    pub fn component(&self, n: usize) -> ModuleSummary {
        self.components.get(n).cloned().unwrap_or(ModuleSummary {
            free_rank: 0,
            torsion: Vec::new(),
        })
    }

    pub fn free_ranks(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.free_rank).collect()
    }
}

/// Homology of the torus subcomplex itself: free of rank `f_{i-1}` in
/// degree `i`, one generator per `(i-1)`-simplex, with no torsion over any
/// coefficient ring.
pub fn torus_homology(complex: &SimplicialComplex, ring: &RingSpec) -> GradedModuleSummary {
    let f = complex.f_vector();
    let components = (0..=(complex.dimension() + 1).max(0))
        .map(|i| ModuleSummary {
            free_rank: f.f(i - 1) as usize,
            torsion: Vec::new(),
        })
        .collect();
    GradedModuleSummary {
        ring: ring.clone(),
        components,
    }
}

fn beta_matrices_int(complex: &SimplicialComplex) -> Vec<Matrix<i64>> {
    let shared = Arc::new(complex.clone());
    let ring = FaceRing::new(shared, IntRing);
    let top = ring.top_degree();
    // matrix into degree n is multiplication from degree n - 1; degree 0
    // receives the zero map from the nonexistent degree -1
    let mut out = Vec::new();
    for n in 0..=top {
        if n == 0 {
            out.push(Matrix::zero(complex.simplices_of_dim(-1).len(), 0));
        } else {
            out.push(
                ring.beta_mult_matrix(n - 1)
                    .map(|b| i64::try_from(b).expect("beta matrix entries are signs")),
            );
        }
    }
    out
}

/// The graded module underlying the quotient of the face ring by the ideal
/// generated by `beta`: in degree `n`, the cokernel of multiplication by
/// `beta` from degree `n - 1`. Over the integers and their localizations
/// the torsion is reported through Smith normal form.
pub fn quotient_by_beta_summary(
    complex: &SimplicialComplex,
    ring: &RingSpec,
) -> GradedModuleSummary {
    let matrices = beta_matrices_int(complex);
    let components = matrices
        .iter()
        .map(|m| {
            let rank = rank_over_spec(ring, m);
            let torsion = crate::snf::torsion_over_spec(ring, m);
            ModuleSummary {
                free_rank: m.rows() - rank,
                torsion,
            }
        })
        .collect();
    GradedModuleSummary {
        ring: ring.clone(),
        components,
    }
}

/// Coefficient arithmetic that can decide membership in an integer lattice
/// image under a given ring spec; implemented by the scalars usable in
/// face-ring quotients.
pub trait QuotientScalar: Ring {
    fn matches_spec(&self, spec: &RingSpec) -> bool;
    fn coset_vanishes(&self, snf: &SmithForm<BigInt>, spec: &RingSpec, v: &[Self::Elem]) -> bool;
}

impl QuotientScalar for IntRing {
    fn matches_spec(&self, spec: &RingSpec) -> bool {
        matches!(spec, RingSpec::Integers | RingSpec::IntegersInverted(_))
    }
    fn coset_vanishes(&self, snf: &SmithForm<BigInt>, spec: &RingSpec, v: &[BigInt]) -> bool {
        snf.image_contains_int(spec, v)
    }
}

impl QuotientScalar for RatField {
    fn matches_spec(&self, spec: &RingSpec) -> bool {
        matches!(spec, RingSpec::Rationals)
    }
    fn coset_vanishes(
        &self,
        snf: &SmithForm<BigInt>,
        _spec: &RingSpec,
        v: &[num::BigRational],
    ) -> bool {
        snf.image_contains_rat(v)
    }
}

impl QuotientScalar for ModField {
    fn matches_spec(&self, spec: &RingSpec) -> bool {
        matches!(spec, RingSpec::PrimeField(p) if *p == self.p)
    }
    fn coset_vanishes(&self, snf: &SmithForm<BigInt>, spec: &RingSpec, v: &[u64]) -> bool {
        let lifted: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        snf.image_contains_int(spec, &lifted)
    }
}

/// The quotient of the face ring by the ideal generated by `beta`, with a
/// working product: cosets are represented by arbitrary elements and
/// compared by testing the difference for membership in the image of
/// multiplication by `beta`.
///
/// When the complex is acyclic over the ring, this quotient is the whole
/// cohomology ring of the infinite cyclic cover.
pub struct FaceRingQuotient<R: QuotientScalar> {
    face_ring: FaceRing<R>,
    spec: RingSpec,
    /// Per degree `n`, the Smith form (with row transform) of the integer
    /// matrix of multiplication by `beta` into degree `n`.
    forms: Vec<SmithForm<BigInt>>,
}

impl<R: QuotientScalar> FaceRingQuotient<R> {
    pub fn new(
        complex: Arc<SimplicialComplex>,
        spec: RingSpec,
        ring: R,
    ) -> Result<Self, FaceRingError> {
        if !ring.matches_spec(&spec) {
            return Err(FaceRingError::IncompatibleSpec {
                spec: spec.to_string(),
                arithmetic: format!("{ring:?}"),
            });
        }
        let forms = beta_matrices_int(&complex)
            .iter()
            .map(|m| smith_normal_form_with_transform(&IntRing, &m.lift(&IntRing)))
            .collect();
        Ok(FaceRingQuotient {
            face_ring: FaceRing::new(complex, ring),
            spec,
            forms,
        })
    }

    pub fn face_ring(&self) -> &FaceRing<R> {
        &self.face_ring
    }

    pub fn summary(&self) -> GradedModuleSummary {
        quotient_by_beta_summary(self.face_ring.complex(), &self.spec)
    }

    /// Does the element represent the zero coset?
    pub fn is_zero_class(&self, f: &ExteriorElement<R>) -> Result<bool, FaceRingError> {
        self.face_ring.check(f)?;
        if f.is_zero() {
            return Ok(true);
        }
        let n = f.degree();
        if n >= self.forms.len() {
            return Ok(true);
        }
        let v = self.face_ring.coefficient_vector(f);
        Ok(self
            .face_ring
            .ring()
            .coset_vanishes(&self.forms[n], &self.spec, &v))
    }

    pub fn classes_equal(
        &self,
        f: &ExteriorElement<R>,
        g: &ExteriorElement<R>,
    ) -> Result<bool, FaceRingError> {
        let diff = self.face_ring.sub(f, g)?;
        self.is_zero_class(&diff)
    }

    /// The induced product on cosets: the coset of the shuffle product of
    /// any two representatives.
    pub fn multiply(
        &self,
        f: &ExteriorElement<R>,
        g: &ExteriorElement<R>,
    ) -> Result<ExteriorElement<R>, FaceRingError> {
        self.face_ring.shuffle_product(f, g)
    }

    /// Representatives generating the free part of the degree-`n`
    /// component.
    pub fn free_generators(&self, n: usize) -> Vec<ExteriorElement<R>> {
        let Some(form) = self.forms.get(n) else {
            return Vec::new();
        };
        let (free, _) = form.cokernel_generators();
        free.into_iter()
            .map(|col| self.element_from_int_vector(n, &col))
            .collect()
    }

    /// Representatives of the finite cyclic summands in degree `n`,
    /// together with their orders over the selected ring (localized
    /// orders for inverted-prime rings; summands whose order becomes a
    /// unit are dropped).
    pub fn torsion_generators(&self, n: usize) -> Vec<(ExteriorElement<R>, BigInt)> {
        let Some(form) = self.forms.get(n) else {
            return Vec::new();
        };
        let inverted = self.spec.inverted_primes();
        let (_, torsion) = form.cokernel_generators();
        torsion
            .into_iter()
            .filter_map(|(col, order)| {
                let order = coprime_part(&order, &inverted);
                if order == BigInt::from(1) {
                    None
                } else {
                    Some((self.element_from_int_vector(n, &col), order))
                }
            })
            .collect()
    }

    fn element_from_int_vector(&self, degree: usize, coeffs: &[BigInt]) -> ExteriorElement<R> {
        let ring = self.face_ring.ring().clone();
        let lifted: Vec<R::Elem> = coeffs.iter().map(|c| ring.from_integer(c)).collect();
        self.face_ring.element_from_vector(degree, &lifted)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{generate, Generator};

    fn shared(spec: &str) -> Arc<SimplicialComplex> {
        Arc::new(generate(&Generator::parse(spec).unwrap()).unwrap())
    }

    #[test]
    fn dual_basis_elements() {
        let ring = FaceRing::new(shared("simplex(2)"), IntRing);
        let unit = ring.dual_basis_element(&[]).unwrap();
        assert_eq!(unit.degree(), 0);
        let v = ring.dual_basis_by_labels(&["0"]).unwrap();
        assert_eq!(v.degree(), 1);
        let e = ring.dual_basis_by_labels(&["0", "1"]).unwrap();
        assert_eq!(e.degree(), 2);
        assert!(ring.dual_basis_by_labels(&["0", "9"]).is_err());
    }

    #[test]
    fn dual_basis_rejects_non_simplices() {
        let ring = FaceRing::new(shared("cycle(4)"), IntRing);
        // the diagonal is not an edge of the square
        let err = ring.dual_basis_by_labels(&["0", "2"]).unwrap_err();
        assert!(matches!(err, FaceRingError::NotASimplex(_)));
    }

    #[test]
    fn product_of_vertex_duals_along_an_edge() {
        let ring = FaceRing::new(shared("simplex(1)"), IntRing);
        let dv = ring.dual_basis_by_labels(&["0"]).unwrap();
        let dw = ring.dual_basis_by_labels(&["1"]).unwrap();
        let product = ring.shuffle_product(&dv, &dw).unwrap();
        let edge = ring.dual_basis_by_labels(&["0", "1"]).unwrap();
        assert_eq!(product, edge);
        // and in the other order the sign flips
        let flipped = ring.shuffle_product(&dw, &dv).unwrap();
        assert_eq!(flipped, ring.neg(&edge));
    }

    #[test]
    fn product_vanishes_off_the_complex() {
        let ring = FaceRing::new(shared("points(2)"), IntRing);
        let dv = ring.dual_basis_by_labels(&["0"]).unwrap();
        let dw = ring.dual_basis_by_labels(&["1"]).unwrap();
        assert!(ring.shuffle_product(&dv, &dw).unwrap().is_zero());
        assert!(ring.shuffle_product(&dv, &dv).unwrap().is_zero());
    }

    #[test]
    fn beta_examples() {
        let ring = FaceRing::new(shared("simplex(2)"), IntRing);
        let beta = ring.beta();
        assert_eq!(
            ring.coefficient_vector(&beta),
            vec![BigInt::from(1), BigInt::from(1), BigInt::from(1)]
        );
        let empty = FaceRing::new(Arc::new(SimplicialComplex::empty()), IntRing);
        assert!(empty.beta().is_zero());
    }

    #[test]
    fn beta_multiplication_on_an_edge() {
        // (beta * dual(v))(v w) = dual(v)(w) - dual(v)(v) = -1
        let ring = FaceRing::new(shared("simplex(1)"), IntRing);
        let m = ring.beta_mult_matrix(1);
        assert_eq!((m.rows(), m.cols()), (1, 2));
        assert_eq!(*m.at(0, 0), BigInt::from(-1));
        assert_eq!(*m.at(0, 1), BigInt::from(1));
    }

    #[test]
    fn beta_matrix_in_degree_zero_is_all_ones() {
        let ring = FaceRing::new(shared("simplex_boundary(2)"), IntRing);
        let m = ring.beta_mult_matrix(0);
        assert_eq!((m.rows(), m.cols()), (3, 1));
        for i in 0..3 {
            assert_eq!(*m.at(i, 0), BigInt::from(1));
        }
    }

    #[test]
    fn beta_matrix_equals_transposed_boundary() {
        use crate::homology::augmented_chain_complex;
        for spec in ["simplex(2)", "simplex_boundary(2)", "rp2_six", "cycle(5)"] {
            let complex = shared(spec);
            let ring = FaceRing::new(Arc::clone(&complex), IntRing);
            let data = augmented_chain_complex(&complex, &RingSpec::Integers);
            for n in 0..=ring.top_degree() {
                let from_shuffles = ring.beta_mult_matrix(n);
                let from_boundaries = data.coboundary_matrix(n as isize - 1).lift(&IntRing);
                assert_eq!(from_shuffles, from_boundaries, "{spec} degree {n}");
            }
        }
    }

    #[test]
    fn beta_squares_to_zero() {
        let ring = FaceRing::new(shared("simplex(3)"), IntRing);
        let beta = ring.beta();
        assert!(ring.shuffle_product(&beta, &beta).unwrap().is_zero());
        let f = ring.dual_basis_by_labels(&["1", "2"]).unwrap();
        let bf = ring.shuffle_product(&beta, &f).unwrap();
        assert!(ring.shuffle_product(&beta, &bf).unwrap().is_zero());
    }

    #[test]
    fn mixing_complexes_is_rejected() {
        let a = FaceRing::new(shared("simplex(2)"), IntRing);
        let b = FaceRing::new(shared("cycle(4)"), IntRing);
        let fa = a.beta();
        let fb = b.beta();
        assert_eq!(
            a.shuffle_product(&fa, &fb).unwrap_err(),
            FaceRingError::MismatchedComplex
        );
    }

    #[test]
    fn mixing_moduli_is_rejected() {
        let complex = shared("simplex(2)");
        let a = FaceRing::new(Arc::clone(&complex), ModField::new(2));
        let b = FaceRing::new(complex, ModField::new(3));
        assert_eq!(
            a.shuffle_product(&a.beta(), &b.beta()).unwrap_err(),
            FaceRingError::MismatchedRing
        );
    }

    #[test]
    fn torus_homology_ranks() {
        let ranks = torus_homology(&shared("simplex_boundary(2)"), &RingSpec::Integers);
        assert_eq!(ranks.free_ranks(), vec![1, 3, 3]);
        let ranks = torus_homology(&shared("simplex(3)"), &RingSpec::Integers);
        assert_eq!(ranks.free_ranks(), vec![1, 4, 6, 4, 1]);
        let ranks = torus_homology(&SimplicialComplex::empty(), &RingSpec::Rationals);
        assert_eq!(ranks.free_ranks(), vec![1]);
    }

    #[test]
    fn quotient_ranks_for_the_triangle_over_q() {
        let summary = quotient_by_beta_summary(&shared("simplex(2)"), &RingSpec::Rationals);
        assert_eq!(summary.free_ranks(), vec![1, 2, 1, 0]);
    }

    #[test]
    fn quotient_ranks_for_a_point_over_z() {
        let summary = quotient_by_beta_summary(&shared("simplex(0)"), &RingSpec::Integers);
        assert_eq!(summary.free_ranks(), vec![1, 0]);
        assert!(summary.components.iter().all(|c| c.torsion.is_empty()));
    }

    #[test]
    fn quotient_product_of_generators_is_nonzero_for_the_torus() {
        // the cover of the full triangle is a 2-torus; the two degree-1
        // generators of the quotient multiply to a generator in degree 2
        let quotient =
            FaceRingQuotient::new(shared("simplex(2)"), RingSpec::Rationals, RatField).unwrap();
        let gens = quotient.free_generators(1);
        assert_eq!(gens.len(), 2);
        let product = quotient.multiply(&gens[0], &gens[1]).unwrap();
        assert!(!quotient.is_zero_class(&product).unwrap());
        // multiplying by beta lands in the ideal
        let beta = quotient.face_ring().beta();
        let killed = quotient.multiply(&beta, &gens[0]).unwrap();
        assert!(quotient.is_zero_class(&killed).unwrap());
    }

    #[test]
    fn quotient_torsion_generator_for_rp2_over_z() {
        let quotient =
            FaceRingQuotient::new(shared("rp2_six"), RingSpec::Integers, IntRing).unwrap();
        let summary = quotient.summary();
        // degree 3 component: cokernel of the coboundary into the faces;
        // it carries the 2-torsion of the projective plane
        assert_eq!(summary.component(3).torsion, vec![BigInt::from(2)]);
        let torsion = quotient.torsion_generators(3);
        assert_eq!(torsion.len(), 1);
        let (generator, order) = &torsion[0];
        assert_eq!(*order, BigInt::from(2));
        assert!(!quotient.is_zero_class(generator).unwrap());
        let doubled = quotient.face_ring().add(generator, generator).unwrap();
        assert!(quotient.is_zero_class(&doubled).unwrap());
    }

    #[test]
    fn quotient_spec_compatibility() {
        assert!(FaceRingQuotient::new(shared("simplex(1)"), RingSpec::Rationals, IntRing).is_err());
        assert!(FaceRingQuotient::new(
            shared("simplex(1)"),
            RingSpec::PrimeField(3),
            ModField::new(5)
        )
        .is_err());
        assert!(FaceRingQuotient::new(
            shared("simplex(1)"),
            RingSpec::integers_inverted([2]).unwrap(),
            IntRing
        )
        .is_ok());
    }

    #[test]
    fn anticommutativity_on_a_small_complex() {
        let ring = FaceRing::new(shared("simplex(3)"), IntRing);
        let elements: Vec<_> = (1..=2)
            .flat_map(|d| {
                ring.complex()
                    .simplices_of_dim(d as isize - 1)
                    .into_iter()
                    .cloned()
                    .collect::<Vec<_>>()
            })
            .map(|s| ring.dual_basis_element(&s).unwrap())
            .collect();
        for f in &elements {
            for g in &elements {
                let fg = ring.shuffle_product(f, g).unwrap();
                let gf = ring.shuffle_product(g, f).unwrap();
                let expected = if (f.degree() * g.degree()) % 2 == 1 {
                    ring.neg(&gf)
                } else {
                    gf
                };
                assert_eq!(fg, expected);
            }
        }
    }
}
