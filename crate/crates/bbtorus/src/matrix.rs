//! Dense exact matrices over an arbitrary coefficient ring.

use crate::arith::{Field, Ring};
use crate::arith::{ModField, RatField};
use crate::ring::{RingError, RingSpec};

/// A dense `rows x cols` matrix in row-major order. Entry types are exact
/// scalars; the ring structure is passed to each operation.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

impl Matrix<i64> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| 0)
    }

    /// Casts the integer entries into an arbitrary ring.
    pub fn lift<R: Ring>(&self, ring: &R) -> Matrix<R::Elem> {
        self.map(|&e| ring.from_int(e))
    }
}

pub fn identity<R: Ring>(ring: &R, n: usize) -> Matrix<R::Elem> {
    Matrix::from_fn(n, n, |i, j| if i == j { ring.one() } else { ring.zero() })
}

pub fn mat_mul<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    assert_eq!(a.cols, b.rows, "dimension mismatch");
    Matrix::from_fn(a.rows, b.cols, |i, j| {
        let mut acc = ring.zero();
        for k in 0..a.cols {
            acc = ring.add(&acc, &ring.mul(a.at(i, k), b.at(k, j)));
        }
        acc
    })
}

pub fn mat_vec<R: Ring>(ring: &R, a: &Matrix<R::Elem>, v: &[R::Elem]) -> Vec<R::Elem> {
    assert_eq!(a.cols, v.len(), "dimension mismatch");
    (0..a.rows)
        .map(|i| {
            let mut acc = ring.zero();
            for (k, entry) in v.iter().enumerate() {
                acc = ring.add(&acc, &ring.mul(a.at(i, k), entry));
            }
            acc
        })
        .collect()
}

pub fn is_zero_matrix<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> bool {
    a.entries.iter().all(|e| ring.is_zero(e))
}

/// Row-reduces over a field and returns the rank together with a basis of
/// the right kernel. The basis vector for the `k`-th free column has a one
/// in that position, so `rank + kernel.len() == cols` always holds and the
/// vectors are visibly independent.
pub fn rank_and_kernel<F: Field>(field: &F, m: &Matrix<F::Elem>) -> (usize, Vec<Vec<F::Elem>>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for j in 0..cols {
        let Some(p) = (r..rows).find(|&i| !field.is_zero(a.at(i, j))) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = field.inv(a.at(r, j));
        for col in j..cols {
            let v = field.mul(a.at(r, col), &inv);
            a.set(r, col, v);
        }
        for i in 0..rows {
            if i != r && !field.is_zero(a.at(i, j)) {
                let factor = a.at(i, j).clone();
                for col in j..cols {
                    let v = field.sub(a.at(i, col), &field.mul(&factor, a.at(r, col)));
                    a.set(i, col, v);
                }
            }
        }
        pivot_cols.push(j);
        r += 1;
        if r == rows {
            break;
        }
    }
    let mut kernel = Vec::new();
    let pivot_set: std::collections::BTreeSet<usize> = pivot_cols.iter().copied().collect();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![field.zero(); cols];
        v[free] = field.one();
        for (row, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = field.neg(a.at(row, free));
        }
        kernel.push(v);
    }
    (r, kernel)
}

/// Rank of an integer matrix over the field selected by `spec`. For the
/// non-field specs the rank is taken over the fraction field, which equals
/// the free rank of the image module.
pub fn rank_over_spec(spec: &RingSpec, m: &Matrix<i64>) -> usize {
    match spec {
        RingSpec::PrimeField(p) => {
            let f = ModField::new(*p);
            rank_and_kernel(&f, &m.lift(&f)).0
        }
        _ => {
            let f = RatField;
            rank_and_kernel(&f, &m.lift(&f)).0
        }
    }
}

/// Rank and kernel dimension of an integer matrix over a field spec;
/// rejects the non-field specs.
pub fn rank_and_nullity_spec(
    spec: &RingSpec,
    m: &Matrix<i64>,
) -> Result<(usize, usize), RingError> {
    spec.require_field()?;
    let rank = rank_over_spec(spec, m);
    Ok((rank, m.cols() - rank))
}
