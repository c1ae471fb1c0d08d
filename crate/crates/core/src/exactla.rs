//! Dense exact linear algebra.
//!
//! Elimination clears the denominators of each row and then runs Bareiss'
//! fraction-free algorithm over the integer type of the scalar, so entries
//! of the working matrix stay minors of the input and never leave the
//! integers. Only the final back-substitution for the reduced form happens
//! in the field.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed when `rows` is empty.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: nrows, cols, data })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch { expected: rows, found: col.len() });
            }
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows * cols");
        Matrix { rows, cols, data: entries.iter().map(|&v| T::from_i64(v)).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: rhs.rows });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = out.data[idx].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    pub fn rank(&self) -> usize {
        let mut work = self.integer_rows();
        bareiss_echelon(&mut work, self.cols).len()
    }

    /// Reduced row echelon form and pivot columns.
    ///
    /// The result has the same shape as `self`; zero rows sit at the bottom.
    pub fn rref(&self) -> (Matrix<T>, Vec<usize>) {
        let mut work = self.integer_rows();
        let pivots = bareiss_echelon(&mut work, self.cols);
        let mut rows: Vec<Vec<T>> =
            work.into_iter().take(pivots.len()).map(|r| r.into_iter().map(T::from_int).collect()).collect();
        for r in (0..pivots.len()).rev() {
            let p = pivots[r];
            let lead = rows[r][p].clone();
            if !lead.is_one() {
                for v in rows[r].iter_mut() {
                    if !v.is_zero() {
                        *v = v.clone() / lead.clone();
                    }
                }
            }
            let (above, rest) = rows.split_at_mut(r);
            let pivot_row = &rest[0];
            for row in above.iter_mut() {
                let factor = row[p].clone();
                if factor.is_zero() {
                    continue;
                }
                for (v, pv) in row.iter_mut().zip(pivot_row) {
                    if !pv.is_zero() {
                        *v = v.clone() - factor.clone() * pv.clone();
                    }
                }
            }
        }
        let mut out = Self::zeros(self.rows, self.cols);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                out.set(i, j, v);
            }
        }
        (out, pivots)
    }

    /// Basis of the right kernel, one vector per non-pivot column.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![T::zero(); self.cols];
                v[f] = T::one();
                for (row, &p) in pivots.iter().enumerate() {
                    let e = r.get(row, f);
                    if !e.is_zero() {
                        v[p] = -e.clone();
                    }
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix<T>> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, T::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    fn integer_rows(&self) -> Vec<Vec<T::Int>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let lcm = row.iter().filter(|v| !v.is_zero()).fold(T::Int::one(), |acc, v| acc.lcm(v.denom()));
                row.iter()
                    .map(|v| {
                        if v.is_zero() {
                            T::Int::zero()
                        } else {
                            v.numer().clone() * (lcm.clone() / v.denom().clone())
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

/// In-place fraction-free forward elimination. Returns the pivot columns;
/// the first `pivots.len()` rows of `rows` hold the echelon form.
pub(crate) fn bareiss_echelon<I>(rows: &mut [Vec<I>], ncols: usize) -> Vec<usize>
where
    I: Integer + Clone,
{
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut prev = I::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let (top, bottom) = rows.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        for row in bottom.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..ncols {
                let a = pivot.clone() * row[j].clone();
                let b = if lead.is_zero() || pivot_row[j].is_zero() {
                    I::zero()
                } else {
                    lead.clone() * pivot_row[j].clone()
                };
                let num = a - b;
                row[j] = if num.is_zero() { num } else { num / prev.clone() };
            }
            row[c] = I::zero();
        }
        // earlier columns of the rows below are already zero
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use proptest::prelude::*;

    type M = Matrix<Rational>;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(M::identity(3).rank(), 3);
        assert_eq!(M::zeros(4, 7).rank(), 0);
        assert_eq!(M::from_i64(2, 2, &[1, 2, 2, 4]).rank(), 1);
        assert_eq!(M::zeros(0, 5).rank(), 0);
        assert_eq!(M::zeros(3, 0).rank(), 0);
    }

    #[test]
    fn nullspace_examples() {
        assert!(M::identity(3).nullspace().is_empty());
        assert_eq!(M::zeros(2, 3).nullspace().len(), 3);
        let ns = M::from_i64(1, 2, &[1, 1]).nullspace();
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0][0].clone(), -ns[0][1].clone());
        assert!(!ns[0][0].is_zero());
    }

    #[test]
    fn rref_examples() {
        let (r, p) = M::identity(3).rref();
        assert_eq!(r, M::identity(3));
        assert_eq!(p, vec![0, 1, 2]);

        let (r, p) = M::from_i64(2, 2, &[0, 1, 0, 2]).rref();
        assert_eq!(r, M::from_i64(2, 2, &[0, 1, 0, 0]));
        assert_eq!(p, vec![1]);

        let (r, _) = M::from_i64(1, 2, &[2, 4]).rref();
        assert_eq!(r, M::from_i64(1, 2, &[1, 2]));
    }

    #[test]
    fn rref_with_fractions() {
        let m = M::from_rows(
            3,
            vec![
                vec![Rational::new(1.into(), 2.into()), q(1), q(0)],
                vec![q(1), Rational::new(1.into(), 3.into()), q(2)],
            ],
        )
        .unwrap();
        let (r, p) = m.rref();
        assert_eq!(p, vec![0, 1]);
        // back-substitution check: r = E m for the row operations, so the row space agrees
        let stacked = M::from_rows(3, [m.row_vecs(), r.row_vecs()].concat()).unwrap();
        assert_eq!(stacked.rank(), 2);
        assert_eq!(r.get(0, 0), &q(1));
        assert_eq!(r.get(1, 0), &q(0));
        assert_eq!(r.get(0, 1), &q(0));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = M::from_i64(3, 3, &[2, 1, 0, 0, 1, 3, 1, 0, 1]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), M::identity(3));
        assert!(M::from_i64(2, 2, &[1, 2, 2, 4]).inverse().is_none());
    }

    #[test]
    fn machine_integers_work_too() {
        let m = Matrix::<num_rational::Rational64>::from_i64(3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        assert_eq!(m.rank(), 2);
    }

    fn small_matrix() -> impl Strategy<Value = M> {
        (0usize..6, 0usize..6).prop_flat_map(|(r, c)| {
            prop::collection::vec((-3i64..=3, 1i64..=3), r * c).prop_map(move |cells| {
                let rows = cells
                    .chunks(c.max(1))
                    .take(r)
                    .map(|ch| ch.iter().map(|&(n, d)| Rational::new(n.into(), d.into())).collect())
                    .collect::<Vec<Vec<Rational>>>();
                if c == 0 {
                    M::zeros(r, 0)
                } else {
                    M::from_rows(c, rows).unwrap()
                }
            })
        })
    }

    proptest! {
        #[test]
        fn rank_of_transpose(m in small_matrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn nullspace_vectors_are_killed(m in small_matrix()) {
            let ns = m.nullspace();
            prop_assert_eq!(ns.len(), m.cols() - m.rank());
            for v in ns {
                prop_assert!(m.mul_vec(&v).unwrap().iter().all(Zero::is_zero));
            }
        }

        #[test]
        fn rref_is_idempotent_and_rank_preserving(m in small_matrix()) {
            let (r, p) = m.rref();
            prop_assert_eq!(r.rank(), m.rank());
            prop_assert_eq!(p.len(), m.rank());
            let (rr, pp) = r.rref();
            prop_assert_eq!(rr, r);
            prop_assert_eq!(pp, p);
        }
    }
}
