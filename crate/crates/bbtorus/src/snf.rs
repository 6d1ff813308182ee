//! Smith normal form over a Euclidean domain.
//!
//! The same routine diagonalizes integer matrices and matrices over `F[z]`
//! for a field `F`. Pivots are chosen of minimal Euclidean size (absolute
//! value, respectively degree) to control entry growth; all arithmetic is
//! arbitrary precision, so correctness does not depend on the strategy.
//!
//! Row operations can optionally be accumulated into an invertible matrix
//! `P` (together with its inverse). Column operations are invertible and do
//! not change the column span, so `P` alone suffices to decide membership in
//! the image lattice and to produce cokernel generators.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::arith::{EuclideanRing, IntRing};
use crate::matrix::{identity, Matrix};
use crate::ring::RingSpec;

/// Free generators of a cokernel, followed by generators of the finite
/// cyclic summands with their orders.
pub type CokernelGenerators = (Vec<Vec<BigInt>>, Vec<(Vec<BigInt>, BigInt)>);

/// Result of a Smith normal form computation.
///
/// `invariant_factors` lists the nonzero diagonal entries `d_1 | d_2 | ... |
/// d_r` as canonical associates; the rank of the matrix is their count.
#[derive(Debug, Clone)]
pub struct SmithForm<T> {
    pub invariant_factors: Vec<T>,
    pub rows: usize,
    pub cols: usize,
    /// `P` with `P * M * Q = diag(d_1, ..., d_r, 0, ...)` for some
    /// invertible `Q` that is not retained.
    pub row_transform: Option<Matrix<T>>,
    pub row_transform_inv: Option<Matrix<T>>,
}

impl<T> SmithForm<T> {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }
}

pub fn smith_normal_form<R: EuclideanRing>(ring: &R, m: &Matrix<R::Elem>) -> SmithForm<R::Elem> {
    smith_normal_form_impl(ring, m, false)
}

pub fn smith_normal_form_with_transform<R: EuclideanRing>(
    ring: &R,
    m: &Matrix<R::Elem>,
) -> SmithForm<R::Elem> {
    smith_normal_form_impl(ring, m, true)
}

/// Smith normal form of an integer matrix given with machine-sized entries.
pub fn smith_normal_form_int(m: &Matrix<i64>) -> SmithForm<BigInt> {
    smith_normal_form(&IntRing, &m.lift(&IntRing))
}

fn smith_normal_form_impl<R: EuclideanRing>(
    ring: &R,
    m: &Matrix<R::Elem>,
    track: bool,
) -> SmithForm<R::Elem> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut p = track.then(|| identity(ring, rows));
    let mut p_inv = track.then(|| identity(ring, rows));

    // r_i <- r_i - q * r_k, mirrored on P; the inverse op acts on columns
    // of P^{-1}: c_k <- c_k + q * c_i.
    let row_sub = |a: &mut Matrix<R::Elem>,
                   p: &mut Option<Matrix<R::Elem>>,
                   p_inv: &mut Option<Matrix<R::Elem>>,
                   i: usize,
                   k: usize,
                   q: &R::Elem| {
        for j in 0..a.cols() {
            let v = ring.sub(a.at(i, j), &ring.mul(q, a.at(k, j)));
            a.set(i, j, v);
        }
        if let Some(p) = p {
            for j in 0..p.cols() {
                let v = ring.sub(p.at(i, j), &ring.mul(q, p.at(k, j)));
                p.set(i, j, v);
            }
        }
        if let Some(pi) = p_inv {
            for j in 0..pi.rows() {
                let v = ring.add(pi.at(j, k), &ring.mul(q, pi.at(j, i)));
                pi.set(j, k, v);
            }
        }
    };
    let row_swap = |a: &mut Matrix<R::Elem>,
                    p: &mut Option<Matrix<R::Elem>>,
                    p_inv: &mut Option<Matrix<R::Elem>>,
                    i: usize,
                    k: usize| {
        a.swap_rows(i, k);
        if let Some(p) = p {
            p.swap_rows(i, k);
        }
        if let Some(pi) = p_inv {
            pi.swap_cols(i, k);
        }
    };

    let steps = rows.min(cols);
    let mut rank = 0usize;
    for k in 0..steps {
        // smallest nonzero entry of the trailing submatrix becomes the pivot
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if ring.is_zero(a.at(i, j)) {
                    continue;
                }
                pivot = match pivot {
                    Some((pi, pj))
                        if ring.norm_cmp(a.at(pi, pj), a.at(i, j)) != Ordering::Greater =>
                    {
                        Some((pi, pj))
                    }
                    _ => Some((i, j)),
                };
            }
        }
        let Some((pi, pj)) = pivot else {
            break;
        };
        row_swap(&mut a, &mut p, &mut p_inv, pi, k);
        a.swap_cols(pj, k);

        'reduce: loop {
            // clear column k below the pivot
            for i in k + 1..rows {
                if ring.is_zero(a.at(i, k)) {
                    continue;
                }
                let (q, r) = ring.div_rem(a.at(i, k), a.at(k, k));
                if !ring.is_zero(&q) {
                    row_sub(&mut a, &mut p, &mut p_inv, i, k, &q);
                }
                if !ring.is_zero(&r) {
                    // the remainder has strictly smaller norm: promote it
                    row_swap(&mut a, &mut p, &mut p_inv, i, k);
                    continue 'reduce;
                }
            }
            // clear row k right of the pivot; column k is zero below the
            // pivot now, so these column operations only touch row k
            for j in k + 1..cols {
                if ring.is_zero(a.at(k, j)) {
                    continue;
                }
                let (q, r) = ring.div_rem(a.at(k, j), a.at(k, k));
                if !ring.is_zero(&q) {
                    for i in 0..rows {
                        let v = ring.sub(a.at(i, j), &ring.mul(&q, a.at(i, k)));
                        a.set(i, j, v);
                    }
                }
                if !ring.is_zero(&r) {
                    a.swap_cols(j, k);
                    continue 'reduce;
                }
            }
            // pivot must divide the whole trailing submatrix
            for i in k + 1..rows {
                for j in k + 1..cols {
                    if ring.is_zero(a.at(i, j)) {
                        continue;
                    }
                    let (_, r) = ring.div_rem(a.at(i, j), a.at(k, k));
                    if !ring.is_zero(&r) {
                        let one = ring.one();
                        let neg_one = ring.neg(&one);
                        // r_k <- r_k + r_i, then re-reduce
                        row_sub(&mut a, &mut p, &mut p_inv, k, i, &neg_one);
                        continue 'reduce;
                    }
                }
            }
            break;
        }
        // normalize the pivot to its canonical associate
        let (assoc, unit) = ring.canonical_assoc(a.at(k, k));
        if unit != ring.one() {
            let u_inv = ring.unit_inv(&unit);
            a.set(k, k, assoc);
            if let Some(p) = &mut p {
                for j in 0..p.cols() {
                    let v = ring.mul(&u_inv, p.at(k, j));
                    p.set(k, j, v);
                }
            }
            if let Some(pi) = &mut p_inv {
                for i in 0..pi.rows() {
                    let v = ring.mul(&unit, pi.at(i, k));
                    pi.set(i, k, v);
                }
            }
        }
        rank = k + 1;
    }

    let invariant_factors = (0..rank).map(|k| a.at(k, k).clone()).collect();
    SmithForm {
        invariant_factors,
        rows,
        cols,
        row_transform: p,
        row_transform_inv: p_inv,
    }
}

/// Largest divisor of `d` coprime to the primes in `s`.
pub fn coprime_part(d: &BigInt, s: &BTreeSet<u64>) -> BigInt {
    let mut d = d.abs();
    for &p in s {
        let p = BigInt::from(p);
        while !d.is_zero() && (&d % &p).is_zero() {
            d /= &p;
        }
    }
    d
}

/// Reinterprets an integer Smith form over the localization inverting the
/// primes in `s`: every factor is replaced by its largest divisor coprime
/// to `s`. Factors that become units stay in the list as ones; consumers
/// that report torsion drop them.
pub fn localize_invariant_factors(
    form: &SmithForm<BigInt>,
    s: &BTreeSet<u64>,
) -> SmithForm<BigInt> {
    SmithForm {
        invariant_factors: form
            .invariant_factors
            .iter()
            .map(|d| coprime_part(d, s))
            .collect(),
        rows: form.rows,
        cols: form.cols,
        row_transform: form.row_transform.clone(),
        row_transform_inv: form.row_transform_inv.clone(),
    }
}

/// Nonunit invariant factors of an integer matrix over the given spec:
/// the torsion of its cokernel. Over the fields this is empty.
pub fn torsion_over_spec(spec: &RingSpec, m: &Matrix<i64>) -> Vec<BigInt> {
    match spec {
        RingSpec::Rationals | RingSpec::PrimeField(_) => Vec::new(),
        RingSpec::Integers => nonunit_factors(&smith_normal_form_int(m).invariant_factors),
        RingSpec::IntegersInverted(s) => {
            let form = smith_normal_form_int(m);
            nonunit_factors(
                &form
                    .invariant_factors
                    .iter()
                    .map(|d| coprime_part(d, s))
                    .collect::<Vec<_>>(),
            )
        }
    }
}

fn nonunit_factors(factors: &[BigInt]) -> Vec<BigInt> {
    factors
        .iter()
        .filter(|d| !d.magnitude().is_one())
        .cloned()
        .collect()
}

impl SmithForm<BigInt> {
    /// Does the integer vector `v` lie in the image of the original matrix,
    /// viewed over the ring selected by `spec`?
    pub fn image_contains_int(&self, spec: &RingSpec, v: &[BigInt]) -> bool {
        let p = self
            .row_transform
            .as_ref()
            .expect("membership requires the row transform");
        assert_eq!(v.len(), self.rows);
        let w: Vec<BigInt> = (0..self.rows)
            .map(|i| (0..self.rows).map(|j| p.at(i, j) * &v[j]).sum())
            .collect();
        let r = self.rank();
        match spec {
            RingSpec::Integers => {
                (0..r).all(|i| (&w[i] % &self.invariant_factors[i]).is_zero())
                    && (r..self.rows).all(|i| w[i].is_zero())
            }
            RingSpec::IntegersInverted(s) => {
                (0..r).all(|i| {
                    let d = coprime_part(&self.invariant_factors[i], s);
                    (&w[i] % &d).is_zero()
                }) && (r..self.rows).all(|i| w[i].is_zero())
            }
            RingSpec::Rationals => (r..self.rows).all(|i| w[i].is_zero()),
            RingSpec::PrimeField(p) => {
                let p = BigInt::from(*p);
                (0..r)
                    .all(|i| !(&self.invariant_factors[i] % &p).is_zero() || (&w[i] % &p).is_zero())
                    && (r..self.rows).all(|i| (&w[i] % &p).is_zero())
            }
        }
    }

    /// Rational variant of the membership test, over the rationals.
    pub fn image_contains_rat(&self, v: &[BigRational]) -> bool {
        let p = self
            .row_transform
            .as_ref()
            .expect("membership requires the row transform");
        assert_eq!(v.len(), self.rows);
        let r = self.rank();
        (r..self.rows).all(|i| {
            let w: BigRational = (0..self.rows)
                .map(|j| BigRational::from_integer(p.at(i, j).clone()) * &v[j])
                .sum();
            w.is_zero()
        })
    }

    /// Generators of the cokernel of the original matrix over the integers:
    /// first the free generators, then `(generator, order)` pairs for the
    /// finite cyclic summands. These are columns of `P^{-1}`.
    pub fn cokernel_generators(&self) -> CokernelGenerators {
        let p_inv = self
            .row_transform_inv
            .as_ref()
            .expect("cokernel generators require the row transform");
        let col =
            |j: usize| -> Vec<BigInt> { (0..self.rows).map(|i| p_inv.at(i, j).clone()).collect() };
        let r = self.rank();
        let free = (r..self.rows).map(col).collect();
        let torsion = (0..r)
            .filter(|&i| !self.invariant_factors[i].magnitude().is_one())
            .map(|i| (col(i), self.invariant_factors[i].clone()))
            .collect();
        (free, torsion)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PolyRing, RatField, Ring};
    use crate::matrix::mat_mul;

    fn int_factors(rows: Vec<Vec<i64>>) -> Vec<i64> {
        let form = smith_normal_form_int(&Matrix::from_rows(rows));
        form.invariant_factors
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn diagonal_identity() {
        assert_eq!(int_factors(vec![vec![1, 0], vec![0, 1]]), vec![1, 1]);
    }

    #[test]
    fn two_by_two_with_torsion() {
        assert_eq!(int_factors(vec![vec![2, 4], vec![6, 8]]), vec![2, 4]);
    }

    #[test]
    fn divisibility_chain_and_sign() {
        let factors = int_factors(vec![vec![6, 0, 0], vec![0, -10, 0], vec![0, 0, 15]]);
        assert_eq!(factors, vec![1, 30, 30]);
    }

    #[test]
    fn zero_and_empty_matrices() {
        assert_eq!(int_factors(vec![vec![0, 0], vec![0, 0]]), Vec::<i64>::new());
        let form = smith_normal_form_int(&Matrix::zero(0, 3));
        assert_eq!(form.rank(), 0);
        let form = smith_normal_form_int(&Matrix::zero(3, 0));
        assert_eq!(form.rank(), 0);
    }

    #[test]
    fn one_minus_z_times_identity() {
        let ring = PolyRing::new(RatField);
        let omz = ring.one_minus_z();
        let m = Matrix::from_fn(2, 2, |i, j| if i == j { omz.clone() } else { ring.zero() });
        let form = smith_normal_form(&ring, &m);
        assert_eq!(form.rank(), 2);
        // canonical associates are monic: z - 1
        let z_minus_one = ring.from_coeffs(vec![RatField.from_int(-1), RatField.from_int(1)]);
        assert_eq!(
            form.invariant_factors,
            vec![z_minus_one.clone(), z_minus_one]
        );
    }

    #[test]
    fn polynomial_chain() {
        let ring = PolyRing::new(RatField);
        let c = |v: i64| ring.from_int(v);
        // [[z-1, 0], [0, z^2-1]] has factors z-1 | z^2-1
        let z_minus_one = ring.from_coeffs(vec![RatField.from_int(-1), RatField.from_int(1)]);
        let z2_minus_one = ring.from_coeffs(vec![
            RatField.from_int(-1),
            RatField.from_int(0),
            RatField.from_int(1),
        ]);
        let m = Matrix::from_rows(vec![
            vec![z2_minus_one.clone(), c(0)],
            vec![c(0), z_minus_one.clone()],
        ]);
        let form = smith_normal_form(&ring, &m);
        assert_eq!(form.invariant_factors, vec![z_minus_one, z2_minus_one]);
    }

    #[test]
    fn localization_examples() {
        let form = SmithForm {
            invariant_factors: vec![BigInt::from(2), BigInt::from(4)],
            rows: 2,
            cols: 2,
            row_transform: None,
            row_transform_inv: None,
        };
        let local = localize_invariant_factors(&form, &BTreeSet::from([2]));
        assert_eq!(
            local.invariant_factors,
            vec![BigInt::from(1), BigInt::from(1)]
        );
        let form = SmithForm {
            invariant_factors: vec![BigInt::from(6)],
            rows: 1,
            cols: 1,
            row_transform: None,
            row_transform_inv: None,
        };
        let local = localize_invariant_factors(&form, &BTreeSet::from([3]));
        assert_eq!(local.invariant_factors, vec![BigInt::from(2)]);
        let local = localize_invariant_factors(&form, &BTreeSet::new());
        assert_eq!(local.invariant_factors, vec![BigInt::from(6)]);
    }

    #[test]
    fn transform_is_invertible_and_sound() {
        let m = Matrix::from_rows(vec![vec![2i64, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        let form = smith_normal_form_with_transform(&IntRing, &m.lift(&IntRing));
        let p = form.row_transform.clone().unwrap();
        let p_inv = form.row_transform_inv.clone().unwrap();
        assert_eq!(mat_mul(&IntRing, &p, &p_inv), identity(&IntRing, 3));
        // every column of the matrix is in its own image
        for j in 0..3 {
            let col: Vec<BigInt> = (0..3).map(|i| BigInt::from(*m.at(i, j))).collect();
            assert!(form.image_contains_int(&RingSpec::Integers, &col));
        }
    }

    #[test]
    fn membership_over_various_specs() {
        // image of diag(2) in Z^1
        let m = Matrix::from_rows(vec![vec![2i64]]);
        let form = smith_normal_form_with_transform(&IntRing, &m.lift(&IntRing));
        let one = vec![BigInt::from(1)];
        let two = vec![BigInt::from(2)];
        assert!(!form.image_contains_int(&RingSpec::Integers, &one));
        assert!(form.image_contains_int(&RingSpec::Integers, &two));
        // 2 becomes a unit in Z[1/2]
        let spec = RingSpec::integers_inverted([2]).unwrap();
        assert!(form.image_contains_int(&spec, &one));
        // over F_2 the image is trivial
        assert!(!form.image_contains_int(&RingSpec::PrimeField(2), &one));
        // over Q it is everything
        assert!(form.image_contains_int(&RingSpec::Rationals, &one));
    }

    #[test]
    fn cokernel_generators_of_a_torsion_quotient() {
        // Z^2 / <(2,0)> = Z/2 + Z
        let m = Matrix::from_rows(vec![vec![2i64], vec![0]]);
        let form = smith_normal_form_with_transform(&IntRing, &m.lift(&IntRing));
        let (free, torsion) = form.cokernel_generators();
        assert_eq!(free.len(), 1);
        assert_eq!(torsion.len(), 1);
        assert_eq!(torsion[0].1, BigInt::from(2));
        // the torsion generator doubled must fall into the image
        let doubled: Vec<BigInt> = torsion[0].0.iter().map(|x| x * 2).collect();
        assert!(form.image_contains_int(&RingSpec::Integers, &doubled));
        assert!(!form.image_contains_int(&RingSpec::Integers, &torsion[0].0));
    }
}
