//! Dense exact linear algebra over Q(zeta_N): Gaussian elimination based
//! solving, rank, and inversion. Row-echelon pivots use exact field
//! inversion, so results are exact, never approximate.

use super::{CycField, CycNum};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("singular or ill-posed linear system")]
    SingularMatrix,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

#[derive(Clone, Debug)]
pub struct CycMatrix {
    field: Arc<CycField>,
    rows: usize,
    cols: usize,
    data: Vec<CycNum>,
}

impl PartialEq for CycMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}
impl Eq for CycMatrix {}

impl CycMatrix {
    pub fn zeros(field: &Arc<CycField>, rows: usize, cols: usize) -> CycMatrix {
        CycMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Arc<CycField>, n: usize) -> CycMatrix {
        let mut m = CycMatrix::zeros(field, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = field.one();
        }
        m
    }

    pub fn from_fn(
        field: &Arc<CycField>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> CycNum,
    ) -> CycMatrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        CycMatrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn at(&self, i: usize, j: usize) -> &CycNum {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut CycNum {
        &mut self.data[i * self.cols + j]
    }

    pub fn transpose(&self) -> CycMatrix {
        CycMatrix::from_fn(&self.field, self.cols, self.rows, |i, j| {
            self.at(j, i).clone()
        })
    }

    pub fn mul(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!(self.cols, other.rows);
        CycMatrix::from_fn(&self.field, self.rows, other.cols, |i, j| {
            let mut acc = self.field.zero();
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                let b = other.at(k, j);
                if b.is_zero() {
                    continue;
                }
                acc = &acc + &(a * b);
            }
            acc
        })
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.at(i, j);
                if i == j {
                    if !e.is_one() {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&i| !self.at(i, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..self.cols {
                    let a = self.at(p, j).clone();
                    let b = self.at(row, j).clone();
                    *self.at_mut(p, j) = b;
                    *self.at_mut(row, j) = a;
                }
            }
            let inv = self.at(row, col).invert().expect("pivot is nonzero");
            for j in col..self.cols {
                let v = self.at(row, j) * &inv;
                *self.at_mut(row, j) = v;
            }
            for i in 0..self.rows {
                if i == row || self.at(i, col).is_zero() {
                    continue;
                }
                let factor = self.at(i, col).clone();
                for j in col..self.cols {
                    let v = &(self.at(i, j) - &(&factor * self.at(row, j)));
                    *self.at_mut(i, j) = v.clone();
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Indices of a maximal linearly independent set of columns.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut m = self.clone();
        m.rref()
    }

    /// Solve self * X = rhs for X, requiring a unique solution.
    /// Errors with `SingularMatrix` when the system is inconsistent or
    /// underdetermined.
    pub fn solve(&self, rhs: &CycMatrix) -> Result<CycMatrix, LinalgError> {
        if rhs.rows != self.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "matrix has {} rows, rhs has {}",
                self.rows, rhs.rows
            )));
        }
        let mut aug = CycMatrix::zeros(&self.field, self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            for j in 0..rhs.cols {
                *aug.at_mut(i, self.cols + j) = rhs.at(i, j).clone();
            }
        }
        let pivots = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return Err(LinalgError::SingularMatrix); // inconsistent
        }
        if pivots.len() < self.cols {
            return Err(LinalgError::SingularMatrix); // underdetermined
        }
        // consistency of the remaining zero rows
        for i in pivots.len()..self.rows {
            for j in 0..rhs.cols {
                if !aug.at(i, self.cols + j).is_zero() {
                    return Err(LinalgError::SingularMatrix);
                }
            }
        }
        let mut x = CycMatrix::zeros(&self.field, self.cols, rhs.cols);
        for (r, &c) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                *x.at_mut(c, j) = aug.at(r, self.cols + j).clone();
            }
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<CycMatrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::DimensionMismatch(
                "inverse of a non-square matrix".into(),
            ));
        }
        self.solve(&CycMatrix::identity(&self.field, self.rows))
    }
}

/// An incrementally built row space with reduced rows, for exact rank,
/// span-membership and intersection computations on large vector families.
pub struct RowSpace {
    field: Arc<CycField>,
    dim: usize,
    /// rows in echelon form: (pivot index, vector with 1 at the pivot)
    rows: Vec<(usize, Vec<CycNum>)>,
}

impl RowSpace {
    pub fn new(field: &Arc<CycField>, dim: usize) -> RowSpace {
        RowSpace {
            field: field.clone(),
            dim,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [CycNum]) {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r_) in v.iter_mut().zip(row.iter()) {
                if !r_.is_zero() {
                    *x = &*x - &(&f * r_);
                }
            }
        }
    }

    /// Insert a vector; returns true iff it enlarged the span.
    pub fn insert(&mut self, mut v: Vec<CycNum>) -> bool {
        assert_eq!(v.len(), self.dim);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = v[p].invert().expect("pivot nonzero");
        for c in v.iter_mut() {
            if !c.is_zero() {
                *c = &*c * &inv;
            }
        }
        self.rows.push((p, v));
        true
    }

    pub fn contains(&self, v: &[CycNum]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|c| c.is_zero())
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn field() -> Arc<CycField> {
        CycField::for_level(4).unwrap()
    }

    #[test]
    fn identity_system_returns_rhs() {
        let f = field();
        let id = CycMatrix::identity(&f, 3);
        let rhs = CycMatrix::from_fn(&f, 3, 1, |i, _| f.from_int(i as i64 + 5));
        assert_eq!(id.solve(&rhs).unwrap(), rhs);
    }

    #[test]
    fn zero_matrix_with_nonzero_rhs_is_singular() {
        let f = field();
        let z = CycMatrix::zeros(&f, 2, 2);
        let rhs = CycMatrix::from_fn(&f, 2, 1, |_, _| f.one());
        assert_eq!(z.solve(&rhs), Err(LinalgError::SingularMatrix));
    }

    #[test]
    fn residual_check_on_a_cyclotomic_3x3() {
        let f = field();
        // deterministic "random" entries built from zeta powers
        let m = CycMatrix::from_fn(&f, 3, 3, |i, j| {
            &f.zeta_pow((3 * i + 5 * j + 1) as i64) + &f.from_int((i + 2 * j) as i64)
        });
        let b = CycMatrix::from_fn(&f, 3, 1, |i, _| f.quantum_int(i as i64 + 2));
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul(&x), b);
    }

    #[test]
    fn rank_and_inverse() {
        let f = field();
        let m = CycMatrix::from_fn(&f, 2, 2, |i, j| {
            if (i, j) == (1, 1) {
                f.from_int(2)
            } else if i == j {
                f.one()
            } else {
                f.zeta_pow(1)
            }
        });
        assert_eq!(m.rank(), 2);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn solve_recovers_vector(entries in prop::collection::vec(-4i64..=4, 9),
                                 v in prop::collection::vec(-4i64..=4, 3)) {
            let f = field();
            let m = CycMatrix::from_fn(&f, 3, 3, |i, j| {
                let k = entries[3 * i + j];
                // mix in zeta so nontrivial field elements appear
                &f.from_int(k) + &f.zeta_pow((i as i64) - (j as i64))
            });
            if m.rank() == 3 {
                let vm = CycMatrix::from_fn(&f, 3, 1, |i, _| f.from_int(v[i]));
                let b = m.mul(&vm);
                let x = m.solve(&b).unwrap();
                prop_assert_eq!(x, vm);
            }
        }
    }

    #[test]
    fn reduce_accepts_long_polynomials() {
        let f = field();
        // zeta^(N+3) should reduce to zeta^3
        let mut v = vec![BigInt::from(0); f.order() + 4];
        v[f.order() + 3] = BigInt::from(1);
        assert_eq!(f.reduce(&v, BigInt::from(1)), f.zeta_pow(3));
    }
}
